//! Property-style invariants: exactness of the scalar arithmetic, canonical
//! forms under re-association, Jacobi, round-trips, and compatibility of the
//! operator action with multiplication.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use capelli::cpoly::CPoly;
use capelli::dops::DopElement;
use capelli::gelfand::gelfand_g;
use capelli::homs::{pi_g, RhoMap};
use capelli::laurent::{series_div, series_mul, LaurentTail};
use capelli::sample::{random_ugl, rng};
use capelli::scalar::{q, Q};
use capelli::tensor::{r1, r2, TensorElement};
use capelli::ugl::{from_adapted, to_adapted, GlRank, UglElement};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_arithmetic_is_exact(
        a in -1_000_000_000_000i64..1_000_000_000_000,
        b in 1i64..1_000_000,
        c in -1_000_000_000_000i64..1_000_000_000_000,
        d in 1i64..1_000_000,
    ) {
        let x = Q::new(BigInt::from(a), BigInt::from(b));
        let y = Q::new(BigInt::from(c), BigInt::from(d));
        let lhs = (x + y) * Q::new(BigInt::from(b) * BigInt::from(d), BigInt::from(1));
        let rhs = Q::new(
            BigInt::from(a) * BigInt::from(d) + BigInt::from(c) * BigInt::from(b),
            BigInt::from(1),
        );
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_composes(coeffs in proptest::collection::vec(-5i64..5, 6)) {
        // p in l0, l1; s1: l0 -> l0 + l1, l1 -> l1; s2: l0 -> l0, l1 -> l0 - 1
        let l0 = CPoly::var(0);
        let l1 = CPoly::var(1);
        let p = l0.pow(2).scale(&q(coeffs[0]))
            .add(&l0.mul(&l1).scale(&q(coeffs[1])))
            .add(&l1.pow(2).scale(&q(coeffs[2])))
            .add(&l0.scale(&q(coeffs[3])))
            .add(&l1.scale(&q(coeffs[4])))
            .add(&CPoly::constant(q(coeffs[5])));
        let mut s1 = BTreeMap::new();
        s1.insert(0u32, l0.add(&l1));
        s1.insert(1u32, l1.clone());
        let mut s2 = BTreeMap::new();
        s2.insert(0u32, l0.clone());
        s2.insert(1u32, l0.sub(&CPoly::constant(q(1))));
        // stepwise
        let stepwise = p.substitute(&s1).unwrap().substitute(&s2).unwrap();
        // composed: apply s2 to the images of s1
        let mut composed = BTreeMap::new();
        for (v, img) in &s1 {
            composed.insert(*v, img.substitute(&s2).unwrap());
        }
        let at_once = p.substitute(&composed).unwrap();
        prop_assert_eq!(stepwise, at_once);
    }

    #[test]
    fn series_division_inverts_multiplication(
        lead_a in -2i64..3,
        coeffs_a in proptest::collection::vec(-7i64..7, 5),
        coeffs_b in proptest::collection::vec(-7i64..7, 5),
        lead_b_val in proptest::sample::select(vec![1i64, -1, 2, -3]),
    ) {
        let a = LaurentTail::new(lead_a, coeffs_a.iter().map(|&c| q(c)).collect(), ());
        let mut bc: Vec<Q> = coeffs_b.iter().map(|&c| q(c)).collect();
        bc[0] = q(lead_b_val);
        let b = LaurentTail::new(0, bc, ());
        let prod = series_mul(&a, &b);
        let back = series_div(&prod, &b, 4).unwrap();
        prop_assert!(back.agrees_down_to(&a, a.lead() - 4).is_ok());
    }
}

proptest! {
    // algebra products are costly; keep the case counts low
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn pbw_products_reassociate(seed in 0u64..10_000) {
        let rank = GlRank::gl(2);
        let mut r = rng(seed);
        let x = random_ugl(&mut r, rank, 2, 2);
        let y = random_ugl(&mut r, rank, 2, 2);
        let z = random_ugl(&mut r, rank, 2, 2);
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn jacobi_identity(seed in 0u64..10_000) {
        let rank = GlRank::gl1(1);
        let mut r = rng(seed);
        let x = random_ugl(&mut r, rank, 2, 2);
        let y = random_ugl(&mut r, rank, 2, 2);
        let z = random_ugl(&mut r, rank, 2, 2);
        let total = x
            .commutator(&y.commutator(&z))
            .add(&y.commutator(&z.commutator(&x)))
            .add(&z.commutator(&x.commutator(&y)));
        prop_assert!(total.is_zero());
    }

    #[test]
    fn adapted_basis_round_trips(seed in 0u64..10_000) {
        let rank = GlRank::gl1(1);
        let mut r = rng(seed);
        let x = random_ugl(&mut r, rank, 3, 4);
        prop_assert_eq!(from_adapted(&to_adapted(&x)), x);
    }

    #[test]
    fn rho_is_multiplicative_on_samples(seed in 0u64..10_000) {
        let n = 1;
        let rho = RhoMap::new(n);
        let rank = GlRank::gl1(n);
        let mut r = rng(seed);
        let x = random_ugl(&mut r, rank, 3, 2);
        let y = random_ugl(&mut r, rank, 3, 2);
        prop_assert_eq!(rho.apply(&x.mul(&y)), rho.apply(&x).mul(&rho.apply(&y)));
    }

    #[test]
    fn pi_g_is_an_idempotent_homomorphism(seed in 0u64..10_000) {
        let rank = GlRank::gl1(1);
        let mut r = rng(seed);
        let x = random_ugl(&mut r, rank, 2, 2);
        let y = random_ugl(&mut r, rank, 2, 2);
        prop_assert_eq!(pi_g(&x.mul(&y)), pi_g(&x).mul(&pi_g(&y)));
        prop_assert_eq!(pi_g(&pi_g(&x)), pi_g(&x));
    }
}

#[test]
fn dop_product_agrees_with_composed_action() {
    // apply(xy, e) = apply(x, apply(y, e)) extended linearly, over a basket
    // of Laurent monomials
    let n = 2;
    let gens = [
        DopElement::t_ratio(n, 1),
        DopElement::t_ratio(n, 2),
        DopElement::t_d(n, 0, 0),
        DopElement::t_d(n, 0, 1),
        DopElement::t_d(n, 1, 0),
        DopElement::t_d(n, 2, 2),
    ];
    let baskets: [[i64; 3]; 4] = [[0, 0, 0], [3, 1, 0], [-2, 2, 1], [5, 0, 3]];
    for x in &gens {
        for y in &gens {
            let xy = x.mul(y);
            for e in &baskets {
                let direct = xy.apply_monomial(e);
                // composed: apply y, then x, linearly
                let mut composed: BTreeMap<Vec<i64>, Q> = BTreeMap::new();
                for (mid, c) in y.apply_monomial(e) {
                    for (fin, d) in x.apply_monomial(&mid) {
                        let entry = composed.entry(fin).or_insert_with(|| q(0));
                        *entry += c.clone() * d;
                    }
                }
                composed.retain(|_, c| !num_traits::Zero::is_zero(c));
                assert_eq!(direct, composed);
            }
        }
    }
}

#[test]
fn dop_triple_products_associate() {
    let n = 1;
    let gens = [
        DopElement::t_ratio(n, 1),
        DopElement::t_d(n, 0, 0),
        DopElement::t_d(n, 0, 1),
        DopElement::t_d(n, 1, 0),
    ];
    for x in &gens {
        for y in &gens {
            for z in &gens {
                assert_eq!(x.mul(y).mul(z), x.mul(&y.mul(z)));
            }
        }
    }
}

#[test]
fn gelfand_invariants_are_central_up_to_dim_plus_one() {
    for rank in [GlRank::gl(1), GlRank::gl(2), GlRank::gl1(2)] {
        for k in 0..=rank.dim() + 1 {
            assert!(
                gelfand_g(rank, k).is_central(),
                "G_{k} not central over {rank}"
            );
        }
    }
}

#[test]
fn r1_r2_commute_with_every_rho_image() {
    for n in [1usize, 2] {
        let rho = RhoMap::new(n);
        let (a, b) = (r1(n), r2(n));
        for i in 0..=n {
            for j in 0..=n {
                assert!(a.commutator(rho.gen_image(i, j)).is_zero());
                assert!(b.commutator(rho.gen_image(i, j)).is_zero());
            }
        }
    }
}

#[test]
fn tensor_centrality_of_rho_central_images() {
    // rho(z) commutes with every generator image when z is central
    let n = 2;
    let rho = RhoMap::new(n);
    let z = gelfand_g(GlRank::gl1(n), 2);
    let image = rho.apply(&z);
    for i in 0..=n {
        for j in 0..=n {
            assert!(image.commutator(rho.gen_image(i, j)).is_zero());
        }
    }
}

#[test]
fn tensor_module_commutator_consistency() {
    // act([x,y], v) = act(x, act(y, v)) - act(y, act(x, v))
    use capelli::repmod::{tensor_act, TensorModVector};
    let n = 2;
    let rho = RhoMap::new(n);
    let rank = GlRank::gl1(n);
    let lam = vec![capelli::scalar::qr(1, 3), capelli::scalar::qr(-1, 5)];
    let v = TensorModVector::highest(n, 1, lam, 4);
    let pairs = [((1, 0), (0, 1)), ((2, 1), (1, 2)), ((1, 1), (2, 0))];
    for ((a, b), (c, d)) in pairs {
        let x = UglElement::gen(rank, a, b);
        let y = UglElement::gen(rank, c, d);
        let lhs = tensor_act(&rho, &x.commutator(&y), &v).unwrap();
        let xy = tensor_act(&rho, &x, &tensor_act(&rho, &y, &v).unwrap()).unwrap();
        let yx = tensor_act(&rho, &y, &tensor_act(&rho, &x, &v).unwrap()).unwrap();
        assert_eq!(lhs, xy.sub(&yx));
    }
}

#[test]
fn verma_action_respects_products() {
    use capelli::repmod::{verma_act, VermaVector};
    let rank = GlRank::gl(2);
    let lam = vec![capelli::scalar::qr(1, 3), capelli::scalar::qr(-1, 5)];
    let v = VermaVector::highest(rank, lam, 4);
    let mut r = rng(11);
    for _ in 0..6 {
        let x = random_ugl(&mut r, rank, 2, 2);
        let y = random_ugl(&mut r, rank, 2, 2);
        let lhs = verma_act(&x.mul(&y), &v).unwrap();
        let rhs = verma_act(&x, &verma_act(&y, &v).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn weight_vectors_shift_as_expected() {
    use capelli::repmod::{tensor_act, TensorModVector};
    // E_ii eigenvalues on the highest vector are the components of
    // lambda-tilde; lowering by E_10 shifts the weight by e_1 - e_0
    let n = 1;
    let rho = RhoMap::new(n);
    let rank = GlRank::gl1(n);
    let lam = vec![capelli::scalar::qr(1, 3)];
    let tilde = capelli::repmod::lambda_tilde(0, &lam);
    let v = TensorModVector::highest(n, 0, lam, 3);
    let lowered = tensor_act(&rho, &UglElement::gen(rank, 1, 0), &v).unwrap();
    for i in 0..=n {
        let e_ii = UglElement::gen(rank, i, i);
        let on_top = tensor_act(&rho, &e_ii, &v).unwrap();
        assert_eq!(on_top, v.scale(&tilde[i]));
        let on_lowered = tensor_act(&rho, &e_ii, &lowered).unwrap();
        let shift = match i {
            0 => q(-1),
            _ if i == 1 => q(1),
            _ => q(0),
        };
        assert_eq!(on_lowered, lowered.scale(&(tilde[i].clone() + shift)));
    }
}

#[test]
fn tensor_product_sanity() {
    // componentwise associativity and centrality of R_1 against samples
    let n = 1;
    let rho = RhoMap::new(n);
    let a = rho.gen_image(1, 0).clone();
    let b = rho.gen_image(0, 1).clone();
    let c = rho.gen_image(1, 1).clone();
    assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    let x = a.mul(&b).add(&c.scale(&q(3)));
    assert!(r1(n).commutator(&x).is_zero());
    assert!(TensorElement::one(rho.target_ctx())
        .mul(&x)
        .eq(&x));
}

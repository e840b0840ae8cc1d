use std::time::Instant;
use capelli::scalar::qr;

fn timeit(name: &str, f: impl FnOnce() -> Result<(), capelli::Failure>) {
    let t = Instant::now();
    let r = f();
    println!("{name}: {:?} -> {:?}", t.elapsed(), r.as_ref().map_err(|e| e.witness.clone()));
}

fn main() {
    timeit("diagram n=3", || {
        let rho = capelli::RhoMap::new(3);
        capelli::homs::verify_diagram(&rho)
    });
    timeit("cayley-hamilton n=1", || {
        capelli::capelli::verify_cayley_hamilton(&capelli::RhoMap::new(1))
    });
    timeit("uprime roundtrip n=2 x100", || {
        capelli::uprime::verify_reduction_roundtrip(2, 100, 42)
    });
    timeit("pi-g-prime n=2", || capelli::uprime::verify_pi_g_prime(2, 42));
    timeit("cleared rows n=2", || capelli::uprime::verify_cleared_u_identity(2));
    timeit("central character n=1 a=2 k<=2 D=3", || {
        let rho = capelli::RhoMap::new(1);
        capelli::repmod::verify_central_character(&rho, 2, &[qr(1,3)], 2, 3)
    });
    timeit("central character n=2 a=1 k<=3 D=2", || {
        let rho = capelli::RhoMap::new(2);
        capelli::repmod::verify_central_character(&rho, 1, &[qr(1,3), qr(-1,5)], 3, 2)
    });
    timeit("character compare n=2 a=1 D=2", || {
        capelli::repmod::character_compare(2, 1, &[qr(1,3), qr(-1,5)], 2)
    });
    timeit("rho-newton n=1 K=5", || {
        capelli::capelli::verify_rho_newton(&capelli::RhoMap::new(1), 5)
    });
    timeit("capelli centrality gl(4) signed", || {
        capelli::capelli::verify_capelli_centrality(capelli::GlRank::gl1(3), true)
    });
    timeit("unsigned centrality fails at n=2", || {
        match capelli::capelli::verify_capelli_centrality(capelli::GlRank::gl(2), false) {
            Err(_) => Ok(()),
            Ok(()) => Err(capelli::Failure::new("arbiter", "unsigned passed")),
        }
    });
}

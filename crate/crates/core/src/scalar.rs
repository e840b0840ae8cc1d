//! Exact rational scalars and small combinatorial helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar used for every coefficient in the crate.
pub type Q = BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Ratio of two integers, `d != 0`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Binomial coefficient C(k, g) as a rational.
pub fn binom(k: usize, g: usize) -> Q {
    if g > k {
        return Q::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..g.min(k - g) {
        num *= BigInt::from(k - j);
        den *= BigInt::from(j + 1);
    }
    Q::new(num, den)
}

/// Falling factorial c(c-1)...(c-k+1), exact for negative `c` as well.
pub fn falling(c: i64, k: u64) -> Q {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= BigInt::from(c) - BigInt::from(j);
    }
    Q::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), q(6));
        assert_eq!(binom(3, 0), q(1));
        assert_eq!(binom(3, 5), q(0));
        assert_eq!(binom(10, 7), q(120));
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling(3, 2), q(6));
        assert_eq!(falling(3, 0), q(1));
        assert_eq!(falling(3, 4), q(0));
        // the Laurent case: (-1)(-2)(-3)
        assert_eq!(falling(-1, 3), q(-6));
    }
}

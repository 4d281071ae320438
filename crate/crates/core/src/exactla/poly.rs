//! Univariate polynomials over the ground field, just enough to find roots in k.
//!
//! Coefficients are stored lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{abs_u64, lcm_big, Rational};
use super::scalar::{FieldSpec, Scalar};

/// Largest prime for which roots are found by exhaustive evaluation.
const FP_SEARCH_LIMIT: u32 = 1 << 20;
/// Largest integer coefficient whose divisors are enumerated.
const DIVISOR_LIMIT: u64 = 1 << 40;

pub fn eval(poly: &[Scalar], x: &Scalar) -> Scalar {
    let f = x.field();
    poly.iter().rev().fold(f.zero(), |acc, c| acc.mul(x).add(c))
}

fn trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    p
}

/// Distinct roots of `poly` lying in its field, in ascending order for ℚ and
/// residue order for 𝔽_p.
///
/// Returns `None` when the search is not attempted: a prime above the
/// exhaustive-search limit, or rational coefficients too large to factor.
pub fn roots(field: FieldSpec, poly: &[Scalar]) -> Option<Vec<Scalar>> {
    let poly = trim(poly.to_vec());
    if poly.len() <= 1 {
        return Some(Vec::new());
    }
    match field {
        FieldSpec::PrimeField(p) => {
            if p > FP_SEARCH_LIMIT {
                return None;
            }
            Some(
                (0..p as i64)
                    .map(|v| field.from_i64(v))
                    .filter(|x| eval(&poly, x).is_zero())
                    .collect(),
            )
        }
        FieldSpec::Rationals => rational_roots(&poly),
    }
}

fn rational_roots(poly: &[Scalar]) -> Option<Vec<Scalar>> {
    let rats: Vec<&Rational> = poly.iter().map(|c| c.as_rational().unwrap()).collect();
    let den = rats.iter().fold(BigInt::one(), |l, r| lcm_big(&l, &r.denom()));
    let mut ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&den / r.denom())).collect();
    let mut out = Vec::new();
    if ints[0].is_zero() {
        out.push(Rational::ZERO);
        while ints[0].is_zero() {
            ints.remove(0);
        }
    }
    if ints.len() > 1 {
        let a0 = abs_u64(&ints[0]).filter(|&v| v <= DIVISOR_LIMIT)?;
        let an = abs_u64(ints.last().unwrap()).filter(|&v| v <= DIVISOR_LIMIT)?;
        let (ps, qs) = (divisors(a0), divisors(an));
        let mut cands: Vec<Rational> = Vec::new();
        for &p in &ps {
            for &q in &qs {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let r = Rational::from_parts(BigInt::from(p), BigInt::from(q)).unwrap();
                cands.push(r.neg());
                cands.push(r);
            }
        }
        for r in cands {
            if eval_int(&ints, &r) {
                out.push(r);
            }
        }
    }
    out.sort();
    out.dedup();
    Some(out.into_iter().map(Scalar::Q).collect())
}

/// Whether `r` is a root of the integer polynomial `ints`.
fn eval_int(ints: &[BigInt], r: &Rational) -> bool {
    // Homogenized Horner: Σ a_i p^i q^(n-i) = 0.
    let (p, q) = (r.numer(), r.denom());
    let mut acc = BigInt::zero();
    let mut qpow = BigInt::one();
    for a in ints.iter().rev() {
        acc = acc * &p + a * &qpow;
        qpow *= &q;
    }
    acc.is_zero()
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| FieldSpec::Rationals.from_i64(x)).collect()
    }

    #[test]
    fn rational_roots_of_split_cubic() {
        // (x - 1)(2x + 3)x = 2x^3 + x^2 - 3x
        let r = roots(FieldSpec::Rationals, &q(&[0, -3, 1, 2])).unwrap();
        let want: Vec<Scalar> = ["-3/2", "0", "1"]
            .iter()
            .map(|s| FieldSpec::Rationals.parse_scalar(s).unwrap())
            .collect();
        assert_eq!(r, want);
    }

    #[test]
    fn irreducible_quadratic_has_no_rational_root() {
        assert!(roots(FieldSpec::Rationals, &q(&[-2, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn prime_field_roots() {
        let f = FieldSpec::PrimeField(5);
        // x^2 + 1 = (x-2)(x-3) over F5.
        let p: Vec<Scalar> = [1, 0, 1].iter().map(|&v| f.from_i64(v)).collect();
        assert_eq!(roots(f, &p).unwrap(), vec![f.from_i64(2), f.from_i64(3)]);
    }

    #[test]
    fn divisor_listing() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }
}

//! Root finding for polynomials that split into distinct linear factors.
//!
//! Coefficients are stored lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Field, Scalar};

/// All roots in the field of a polynomial, each listed once.
pub fn roots(field: Field, coeffs: &[Scalar]) -> Vec<Scalar> {
    match field {
        Field::Rationals => rational_roots(coeffs),
        Field::Prime(p) => {
            let c: Vec<u64> = coeffs
                .iter()
                .map(|s| s.as_i64().expect("residue") as u64)
                .collect();
            prime_roots(p as u64, &c)
                .into_iter()
                .map(|r| field.from_i64(r as i64))
                .collect()
        }
    }
}

fn rational_roots(coeffs: &[Scalar]) -> Vec<Scalar> {
    let q: Vec<BigRational> = coeffs
        .iter()
        .map(|s| match s {
            Scalar::Rational(q) => q.clone(),
            Scalar::Residue(_) => unreachable!(),
        })
        .collect();
    let lcm = q.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = q.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut found: Vec<BigRational> = Vec::new();
    if ints.len() <= 1 {
        return Vec::new();
    }
    if ints[0].is_zero() {
        found.push(BigRational::zero());
        while ints.first().is_some_and(Zero::is_zero) {
            ints.remove(0);
        }
    }
    if ints.len() > 1 {
        let (Some(c0), Some(cn)) = (ints[0].abs().to_u128(), ints.last().unwrap().abs().to_u128()) else {
            return found.into_iter().map(Scalar::Rational).collect();
        };
        let eval = |r: &BigRational| {
            ints.iter()
                .rev()
                .fold(BigRational::zero(), |acc, c| acc * r + BigRational::from_integer(c.clone()))
        };
        for num in divisors(c0) {
            for den in divisors(cn) {
                for sign in [1i32, -1] {
                    let r = BigRational::new(BigInt::from(num) * sign, BigInt::from(den));
                    if !found.contains(&r) && eval(&r).is_zero() {
                        found.push(r);
                    }
                }
            }
        }
    }
    found.into_iter().map(Scalar::Rational).collect()
}

fn divisors(n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 1u128;
    while d * d <= n && d < 2_000_000 {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

type Poly = Vec<u64>;

fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn poly_rem(a: &Poly, b: &Poly, p: u64) -> Poly {
    let mut r = trim(a.clone());
    let b = trim(b.clone());
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = r.last().unwrap() * lead_inv % p;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * c % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_div(a: &Poly, b: &Poly, p: u64) -> Poly {
    let mut r = trim(a.clone());
    let b = trim(b.clone());
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    let mut q = vec![0u64; r.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let factor = r.last().unwrap() * lead_inv % p;
        q[shift] = factor;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * c % p) % p;
        }
        r = trim(r);
    }
    trim(q)
}

fn poly_mul_mod(a: &Poly, b: &Poly, m: &Poly, p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_rem(&out, m, p)
}

fn poly_gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn prime_roots(p: u64, coeffs: &[u64]) -> Vec<u64> {
    let f = trim(coeffs.iter().map(|c| c % p).collect());
    if f.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    if p <= 4096 {
        for x in 0..p {
            let v = f.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p);
            if v == 0 {
                out.push(x);
            }
        }
        return out;
    }
    // keep only the split part gcd(f, x^p - x)
    let x_pow = pow_x(p, &f, p);
    let mut xp_minus_x = x_pow;
    xp_minus_x.resize(xp_minus_x.len().max(2), 0);
    xp_minus_x[1] = (xp_minus_x[1] + p - 1) % p;
    let g = poly_gcd(&f, &trim(xp_minus_x), p);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    split_linear(g, p, &mut rng, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

/// `x^e mod m`.
fn pow_x(e: u64, m: &Poly, p: u64) -> Poly {
    pow_poly(&vec![0, 1], e, m, p)
}

fn pow_poly(base: &Poly, mut e: u64, m: &Poly, p: u64) -> Poly {
    let mut acc: Poly = vec![1];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &b, m, p);
        }
        b = poly_mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn split_linear(f: Poly, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    let f = trim(f);
    match f.len() {
        0 | 1 => {}
        2 => out.push((p - f[0] * inv_mod(f[1], p) % p) % p),
        _ => loop {
            let a = rng.gen_range(0..p);
            let mut h = pow_poly(&vec![a, 1], (p - 1) / 2, &f, p);
            if h.is_empty() {
                h.push(0);
            }
            h[0] = (h[0] + p - 1) % p;
            let g = poly_gcd(&f, &trim(h), p);
            if g.len() > 1 && g.len() < f.len() {
                let rest = poly_div(&f, &g, p);
                split_linear(g, p, rng, out);
                split_linear(rest, p, rng, out);
                return;
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots_of_product() {
        let q = Field::Rationals;
        // (x - 1/2)(x + 3) x = x^3 + 5/2 x^2 - 3/2 x
        let c = [q.zero(), q.parse("-3/2").unwrap(), q.parse("5/2").unwrap(), q.one()];
        let mut r: Vec<String> = roots(q, &c).iter().map(|s| s.to_string()).collect();
        r.sort();
        assert_eq!(r, vec!["-3", "0", "1/2"]);
    }

    #[test]
    fn large_prime_roots() {
        let f = Field::prime(1_000_003).unwrap();
        // (x - 5)(x - 77)(x - 999_999)
        let c = [
            f.from_i64(-5 * 77 * 999_999),
            f.from_i64(5 * 77 + 5 * 999_999 + 77 * 999_999),
            f.from_i64(-(5 + 77 + 999_999)),
            f.one(),
        ];
        let mut r: Vec<i64> = roots(f, &c).iter().map(|s| s.as_i64().unwrap()).collect();
        r.sort();
        assert_eq!(r, vec![5, 77, 999_999]);
    }

    #[test]
    fn irreducible_has_no_roots() {
        let f = Field::prime(1_000_003).unwrap();
        // x^2 + 1 has no roots when p = 3 mod 4
        assert_eq!(1_000_003 % 4, 3);
        assert!(roots(f, &[f.one(), f.zero(), f.one()]).is_empty());
        let q = Field::Rationals;
        assert!(roots(q, &[q.from_i64(-2), q.zero(), q.one()]).is_empty());
    }
}

//! Exact elementary number theory on machine-width naturals.
//!
//! Products are formed in `u128` and reduced, so no residue computation can
//! overflow. Functions that build new moduli (`lcm`, `crt`) check for overflow
//! and report it instead of wrapping.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A natural number together with its prime factorization, `value = ∏ p^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Factors `value` by trial division. `value` must be positive.
    pub fn new(value: u64) -> Self {
        assert!(value > 0, "cannot factor zero");
        let mut factors = Vec::new();
        let mut rest = value;
        let mut p = 2u64;
        while p.saturating_mul(p) <= rest {
            if rest.is_multiple_of(p) {
                let mut e = 0;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    e += 1;
                }
                factors.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        Factorization { value, factors }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs in ascending prime order.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// The largest power of `p` dividing the value.
    pub fn prime_power(&self, p: u64) -> u64 {
        p.pow(self.exponent(p))
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b)).checked_mul(b).ok_or(Error::Overflow)
}

/// p-adic valuation of `k`.
pub fn vp(p: u64, k: u64) -> Result<u32> {
    if k == 0 {
        return Err(Error::ZeroValuation);
    }
    debug_assert!(p >= 2);
    let mut k = k;
    let mut e = 0;
    while k.is_multiple_of(p) {
        k /= p;
        e += 1;
    }
    Ok(e)
}

/// `k_p`, the largest power of `p` dividing `k` (with `k ≥ 1`).
pub fn prime_part(k: u64, p: u64) -> u64 {
    let mut k = k;
    let mut out = 1;
    while k.is_multiple_of(p) {
        k /= p;
        out *= p;
    }
    out
}

/// `k_π = ∏_{p ∈ π} k_p`.
pub fn part(k: u64, primes: &[u64]) -> u64 {
    primes.iter().map(|&p| prime_part(k, p)).product()
}

/// `k_{π'} = k / k_π`.
pub fn part_coprime(k: u64, primes: &[u64]) -> u64 {
    k / part(k, primes)
}

/// π(k): the primes dividing `k`, ascending.
pub fn prime_set(k: u64) -> Vec<u64> {
    Factorization::new(k).primes().collect()
}

/// All positive divisors of `k`, ascending.
pub fn divisors(k: u64) -> Vec<u64> {
    let f = Factorization::new(k);
    let mut out = alloc::vec![1u64];
    for &(p, e) in f.factors() {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Least nonnegative residue of a signed integer.
pub fn reduce(a: i64, m: u64) -> u64 {
    (a as i128).rem_euclid(m as i128) as u64
}

pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn addmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

/// `a^e mod m` by square-and-multiply.
pub fn powmod(a: u64, mut e: u64, m: u64) -> u64 {
    assert!(m > 0, "zero modulus");
    let mut base = a % m;
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        e >>= 1;
    }
    acc
}

/// The geometric sum `S(a, k) = 1 + a + ... + a^(k-1)` reduced modulo `modulus`.
///
/// Uses `S(a, 2k) = S(a, k)(1 + a^k)` and `S(a, k+1) = 1 + a S(a, k)`, never
/// dividing by `a - 1`.
pub fn ese(a: i64, k: u64, modulus: u64) -> u64 {
    assert!(modulus > 0, "zero modulus");
    ese_reduced(reduce(a, modulus), k, modulus)
}

fn ese_reduced(a: u64, k: u64, m: u64) -> u64 {
    if k == 0 {
        return 0;
    }
    if k.is_multiple_of(2) {
        let half = ese_reduced(a, k / 2, m);
        mulmod(half, addmod(1, powmod(a, k / 2, m), m), m)
    } else {
        addmod(1, mulmod(a, ese_reduced(a, k - 1, m), m), m)
    }
}

/// Carmichael's λ(m), the exponent of the unit group mod `m`.
pub fn carmichael(m: u64) -> u64 {
    let f = Factorization::new(m);
    let mut out = 1u64;
    for &(p, e) in f.factors() {
        let lam = if p == 2 {
            match e {
                1 => 1,
                2 => 2,
                _ => 1u64 << (e - 2),
            }
        } else {
            (p - 1) * p.pow(e - 1)
        };
        out = lcm(out, lam).expect("λ(m) ≤ m");
    }
    out
}

/// Multiplicative order of `t` modulo `m`.
pub fn mult_order(t: i64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let r = reduce(t, m);
    if gcd(r, m) != 1 {
        return Err(Error::NotCoprime { value: t, modulus: m });
    }
    Ok(unit_order(r, m))
}

/// Order of a residue already known to be a unit mod `m`.
pub(crate) fn unit_order(t: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let mut d = carmichael(m);
    for p in prime_set(d) {
        while d.is_multiple_of(p) && powmod(t, d / p, m) == 1 {
            d /= p;
        }
    }
    d
}

/// `(g, x, y)` with `a x + b y = g = gcd(a, b)`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

/// Solves a system of congruences `x ≡ r_i (mod m_i)` whose moduli need not be
/// coprime. Returns `(x, lcm m_i)` with `0 ≤ x < lcm`, or
/// [`Error::NoSolution`] when two congruences contradict each other. The empty
/// system gives `(0, 1)`.
pub fn crt(congruences: &[(u64, u64)]) -> Result<(u64, u64)> {
    let Some(&(r0, m0)) = congruences.first() else {
        return Ok((0, 1));
    };
    if m0 == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut x = r0 % m0;
    let mut modulus = m0;
    for &(r, m) in &congruences[1..] {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        let r = r % m;
        let (g, p, _) = ext_gcd(modulus as i128, m as i128);
        let diff = r as i128 - x as i128;
        if diff % g != 0 {
            return Err(Error::NoSolution);
        }
        let step = m as i128 / g;
        let k = ((diff / g) % step * p).rem_euclid(step);
        let new_mod = lcm(modulus, m)?;
        x = ((x as i128 + modulus as i128 * k).rem_euclid(new_mod as i128)) as u64;
        modulus = new_mod;
    }
    Ok((x, modulus))
}

/// Least nonnegative `x` with `a x ≡ b (mod m)`.
pub fn solve_linear(a: i64, b: i64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let a = reduce(a, m);
    let b = reduce(b, m);
    let (g, inv, _) = ext_gcd(a as i128, m as i128);
    let g = if g == 0 { m as i128 } else { g };
    if b as i128 % g != 0 {
        return Err(Error::NoSolution);
    }
    let step = m as i128 / g;
    Ok(((b as i128 / g) % step * inv.rem_euclid(step)).rem_euclid(step) as u64)
}

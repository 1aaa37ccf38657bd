//! Cyclic subgroups of the unit group `U_m` and the data attached to them.
//!
//! A [`UnitSubgroup`] keeps its full element set, so subgroup equality is plain
//! set equality. `U_1` is represented by modulus 1 with the single residue 0.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{self, gcd, part, powmod, prime_part, Factorization};
use crate::error::{Error, Result};

/// The sign ε in `{+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `ε^(p-1)`: only the prime 2 sees the sign.
    pub fn pow_p_minus_one(self, p: u64) -> Sign {
        if p == 2 {
            self
        } else {
            Sign::Plus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// The triple `(r, ε, o)` attached to a cyclic subgroup `T ≤ U_m`.
///
/// `r` is the greatest divisor of `m` with `T` trivial modulo `r_{2'}` and
/// contained in `⟨-1⟩` modulo `r_2`; ε records whether `T` is nontrivial
/// modulo `r_2`; `o` is the order of the ν'-part of `T` modulo `m_ν` where
/// `ν = π(m) ∖ π(r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TInvariants {
    pub r: u64,
    pub epsilon: Sign,
    pub o: u64,
}

/// A cyclic subgroup of `U_m` stored as a sorted residue set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitSubgroup {
    modulus: u64,
    elements: Vec<u64>,
    generator: u64,
}

impl UnitSubgroup {
    /// `⟨t⟩_m`.
    pub fn cyclic(m: u64, t: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        let t = arith::reduce(t, m);
        if gcd(t, m) != 1 {
            return Err(Error::NotCoprime { value: t as i64, modulus: m });
        }
        Ok(Self::from_unit(m, t))
    }

    pub fn trivial(m: u64) -> Self {
        Self::from_unit(m, 1 % m)
    }

    pub(crate) fn from_unit(m: u64, t: u64) -> Self {
        let powers = powers_of(m, t);
        let order = powers.len() as u64;
        let generator = powers
            .iter()
            .enumerate()
            .filter(|&(k, _)| gcd(k as u64, order) == 1)
            .map(|(_, &g)| g)
            .min()
            .expect("a cyclic group has a generator");
        let mut elements = powers;
        elements.sort_unstable();
        UnitSubgroup { modulus: m, elements, generator }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// The least residue generating the subgroup.
    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&(x % self.modulus)).is_ok()
    }

    /// True when `⟨x⟩_m` is exactly this subgroup.
    pub fn is_generated_by(&self, x: u64) -> bool {
        let x = x % self.modulus;
        gcd(x, self.modulus) == 1
            && self.contains(x)
            && arith::unit_order(x, self.modulus) == self.order()
    }

    /// `Res_q(T)`, the image modulo a divisor `q` of the modulus.
    pub fn residue_map(&self, q: u64) -> Result<Self> {
        if q == 0 || !self.modulus.is_multiple_of(q) {
            return Err(Error::NotDivisor { divisor: q, modulus: self.modulus });
        }
        Ok(Self::from_unit(q, self.generator % q))
    }

    /// All residues `g` with `⟨g⟩ = T`, ascending.
    pub fn generators(&self) -> Vec<u64> {
        let powers = powers_of(self.modulus, self.generator);
        let order = powers.len() as u64;
        let mut out: Vec<u64> = powers
            .into_iter()
            .enumerate()
            .filter(|&(k, _)| gcd(k as u64, order) == 1)
            .map(|(_, g)| g)
            .collect();
        out.sort_unstable();
        out
    }

    /// `inv{T} = (r, ε, o)` from the closed forms in terms of a generator `t`:
    /// `r_{2'} = gcd(m_{2'}, t-1)`, `r_2 = max(gcd(m_2, t-1), gcd(m_2, t+1))`,
    /// `o = o_{m_ν}(t)_{ν'}`.
    pub fn inv_triple(&self) -> TInvariants {
        let m = self.modulus;
        if m == 1 {
            return TInvariants { r: 1, epsilon: Sign::Plus, o: 1 };
        }
        let t = self.generator;
        let m2 = prime_part(m, 2);
        let m_odd = m / m2;
        let r_odd = gcd(m_odd, t - 1);
        let r2 = if m2 == 1 {
            1
        } else {
            gcd(m2, t - 1).max(gcd(m2, t + 1))
        };
        let epsilon = if t % r2 != 1 % r2 { Sign::Minus } else { Sign::Plus };
        let r = r_odd * r2;
        let nu: Vec<u64> = Factorization::new(m).primes().filter(|p| !r.is_multiple_of(*p)).collect();
        let m_nu = part(m, &nu);
        let order_nu = arith::unit_order(t % m_nu, m_nu);
        TInvariants { r, epsilon, o: arith::part_coprime(order_nu, &nu) }
    }

    /// The derived modulus `[T, n, s]`.
    pub fn m_prime(&self, n: u64, s: u64) -> u64 {
        m_prime_from(self.modulus, n, s, &self.inv_triple())
    }
}

impl fmt::Display for UnitSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}> mod {}", self.generator, self.modulus)
    }
}

fn powers_of(m: u64, t: u64) -> Vec<u64> {
    if m == 1 {
        return vec![0];
    }
    let mut out = vec![1u64];
    let mut x = t % m;
    while x != 1 {
        out.push(x);
        x = arith::mulmod(x, t, m);
    }
    out
}

/// `[T, n, s] = m_ν ∏_{p ∈ π(r)} m'_p` for a subgroup of `U_m` with the given
/// invariant triple.
///
/// For `ε^(p-1) = 1`: `m'_p = min(m_p, o_p r_p, max(r_p, s_p, r_p s_p o_p / n_p))`.
/// For `ε = -1` at `p = 2`: `r_2` when `o_2 ≤ 2` or `m_2 ≤ 2 r_2`; `m_2 / 2` when
/// `4 ≤ o_2 < n_2`, `4 r_2 ≤ m_2` and `2 s_2 = m_2 < n_2 r_2`; `m_2` otherwise.
pub fn m_prime_from(m: u64, n: u64, s: u64, inv: &TInvariants) -> u64 {
    let TInvariants { r, epsilon, o } = *inv;
    let mut out = 1u64;
    for p in Factorization::new(m).primes() {
        let m_p = prime_part(m, p);
        if r % p != 0 {
            out *= m_p;
            continue;
        }
        let (n_p, s_p, r_p, o_p) = (prime_part(n, p), prime_part(s, p), prime_part(r, p), prime_part(o, p));
        let part = match epsilon.pow_p_minus_one(p) {
            Sign::Plus => {
                // r_p s_p o_p / n_p is either a power of p or below 1 ≤ r_p.
                let third = (r_p * s_p * o_p) / n_p;
                m_p.min(o_p * r_p).min(r_p.max(s_p).max(third))
            }
            Sign::Minus => {
                if o_p <= 2 || m_p <= 2 * r_p {
                    r_p
                } else if 4 <= o_p && o_p < n_p && 4 * r_p <= m_p
                    && (s_p > n_p * r_p || (2 * s_p == m_p && m_p < n_p * r_p)) {
                    m_p / 2
                } else {
                    m_p
                }
            }
        };
        out *= part;
    }
    out
}

/// Membership of `t` in `U_m^{n,s} = { t : m | s(t-1), t^n ≡ 1 (mod m) }`.
pub fn in_umns(t: i64, m: u64, n: u64, s: u64) -> bool {
    if m == 0 {
        return false;
    }
    let t = arith::reduce(t, m);
    gcd(t, m) == 1
        && powmod(t, n, m) == 1 % m
        && arith::mulmod(s % m, (t + m - 1) % m, m) == 0
}

/// Every cyclic subgroup of `U_m` exactly once, ordered by least generator.
pub fn list_cyclic_subgroups(m: u64) -> Vec<UnitSubgroup> {
    cyclic_subgroups_where(m, 1, |_| true)
}

/// Every cyclic subgroup of `U_m` contained in `U_m^{n,s}`, ordered by least
/// generator. Membership in `U_m^{n,s}` only depends on the generator since the
/// set is itself a subgroup.
pub fn cyclic_subgroups_of_umns(m: u64, n: u64, s: u64) -> Vec<UnitSubgroup> {
    // m | s(t-1) pins t to 1 modulo m / gcd(m, s).
    let step = m / gcd(m, s % m);
    cyclic_subgroups_where(m, step, |t| powmod(t, n, m) == 1 % m)
}

fn cyclic_subgroups_where(m: u64, step: u64, keep: impl Fn(u64) -> bool) -> Vec<UnitSubgroup> {
    if m == 1 {
        return vec![UnitSubgroup::trivial(1)];
    }
    let mut seen = vec![false; m as usize];
    let mut out = Vec::new();
    let mut t = 1 % m;
    loop {
        if !seen[t as usize] && gcd(t, m) == 1 && keep(t) {
            let sub = UnitSubgroup::from_unit(m, t);
            for g in sub.generators() {
                seen[g as usize] = true;
            }
            out.push(sub);
        }
        t += step;
        if t >= m {
            break;
        }
    }
    out
}

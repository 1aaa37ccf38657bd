//! Isomorphism invariants of finite metacyclic groups.
//!
//! [`mcinv`] reads `(m, n, s, Δ)` off a minimal factorization and
//! [`metacyclic_id`] turns it into the list `(m, n, s, t)` with the least
//! admissible `t`, so two groups are isomorphic exactly when their ids agree.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{self, divisors, gcd, prime_part, Factorization};
use crate::engine::MetacyclicParams;
use crate::error::{Error, Result};
use crate::minimize::{minimize, order_invariant};
use crate::units::{m_prime_from, Sign, TInvariants, UnitSubgroup};

/// `(|A|, [G:A], [G:B], Δ)` for a minimal factorization `G = AB`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MCInv {
    pub m: u64,
    pub n: u64,
    pub s: u64,
    pub m_prime: u64,
    pub delta: UnitSubgroup,
}

impl MCInv {
    /// `(m, n, s, m', g)` with `g` the least generator of Δ.
    pub fn as_tuple(&self) -> (u64, u64, u64, u64, u64) {
        (self.m, self.n, self.s, self.m_prime, self.delta.generator())
    }
}

impl fmt::Display for MCInv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, n, s, mp, g) = self.as_tuple();
        write!(f, "{m} {n} {s} {mp} {g}")
    }
}

/// The list of metacyclic invariants `(m_G, n_G, s_G, t_G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MetacyclicId {
    pub m: u64,
    pub n: u64,
    pub s: u64,
    pub t: u64,
}

impl MetacyclicId {
    pub fn params(&self) -> MetacyclicParams {
        MetacyclicParams::new(self.m, self.n, self.s, self.t).expect("an invariant list is a valid presentation")
    }

    pub fn as_tuple(&self) -> (u64, u64, u64, u64) {
        (self.m, self.n, self.s, self.t)
    }
}

impl fmt::Display for MetacyclicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.m, self.n, self.s, self.t)
    }
}

pub fn mcinv(params: &MetacyclicParams) -> Result<MCInv> {
    let f = minimize(params)?;
    let m_prime = m_prime_from(f.m, f.n, f.s, &f.invariants);
    let delta = f.action().residue_map(m_prime)?;
    Ok(MCInv { m: f.m, n: f.n, s: f.s, m_prime, delta })
}

/// Residues `ε^(p-1) + r_p (mod m_p)` pinned for every `p ∈ π(r)`.
fn pinned_residues(m: u64, inv: &TInvariants) -> Vec<(u64, u64)> {
    Factorization::new(inv.r)
        .primes()
        .map(|p| {
            let m_p = prime_part(m, p);
            let r_p = prime_part(inv.r, p);
            let residue = match inv.epsilon.pow_p_minus_one(p) {
                Sign::Plus => (1 + r_p) % m_p,
                Sign::Minus => (r_p + m_p - 1) % m_p,
            };
            (residue, m_p)
        })
        .collect()
}

/// The least `t ≥ 0` with the pinned residues and `⟨t⟩_{m'} = Δ`.
fn least_t(m: u64, inv: &TInvariants, delta: &UnitSubgroup) -> Result<u64> {
    if m == 1 {
        return Ok(0);
    }
    let (start, stride) = arith::crt(&pinned_residues(m, inv))?;
    let m_prime = delta.modulus();
    let mut t = start;
    while t < m {
        if delta.is_generated_by(t % m_prime) {
            return Ok(t);
        }
        t += stride;
    }
    Err(Error::Internal(format!("no t below {m} realizes {delta}")))
}

pub fn metacyclic_id(params: &MetacyclicParams) -> Result<MetacyclicId> {
    let inv = mcinv(params)?;
    let triple = inv.delta.inv_triple();
    let t = least_t(inv.m, &triple, &inv.delta)?;
    Ok(MetacyclicId { m: inv.m, n: inv.n, s: inv.s, t })
}

pub fn are_isomorphic(p1: &MetacyclicParams, p2: &MetacyclicParams) -> Result<bool> {
    if p1.order() != p2.order() {
        return Ok(false);
    }
    Ok(metacyclic_id(p1)? == metacyclic_id(p2)?)
}

/// Whether `(m, n, s, Δ)` is the invariant of some finite metacyclic group.
///
/// Checks divisibility, the derived modulus `m'`, the sign conditions at 2 and
/// the `ε^(p-1) = 1` conditions, plus `4 | r` whenever `4 | m`: without the last
/// one `(4, 2, 2, 1 mod 2)` would pass although every cyclic subgroup of `U_4`
/// has `4 | r`.
pub fn is_realizable(m: u64, n: u64, s: u64, delta: &UnitSubgroup) -> Result<bool> {
    if m == 0 || n == 0 || s == 0 {
        return Err(Error::Precondition("m, n and s must be positive".into()));
    }
    let m_prime = delta.modulus();
    if !m.is_multiple_of(m_prime) {
        return Err(Error::NotDivisor { divisor: m_prime, modulus: m });
    }
    let inv = delta.inv_triple();
    let TInvariants { r, epsilon, o } = inv;
    if s == 0 || !m.is_multiple_of(s) || !n.is_multiple_of(delta.order()) {
        return Ok(false);
    }
    let nu: Vec<u64> = Factorization::new(m).primes().filter(|p| r % p != 0).collect();
    let (m_nu, s_nu, mp_nu) = (arith::part(m, &nu), arith::part(s, &nu), arith::part(m_prime, &nu));
    if !(m_nu == s_nu && s_nu == mp_nu) {
        return Ok(false);
    }
    if m_prime != m_prime_from(m, n, s, &inv) {
        return Ok(false);
    }
    if m.is_multiple_of(4) && r % 4 != 0 {
        return Ok(false);
    }
    if epsilon == Sign::Minus {
        let (m2, n2, s2, r2, o2) = (prime_part(m, 2), prime_part(n, 2), prime_part(s, 2), prime_part(r, 2), prime_part(o, 2));
        if m2 / r2 > n2 || m2 > 2 * s2 || s2 == n2 * r2 {
            return Ok(false);
        }
        if n.is_multiple_of(4) && m.is_multiple_of(8) && o2 < n2 && r2 > s2 {
            return Ok(false);
        }
    }
    let plus_ok = Factorization::new(r).primes().filter(|&p| epsilon.pow_p_minus_one(p) == Sign::Plus).all(|p| {
        let (m_p, n_p, s_p, r_p, o_p) = (prime_part(m, p), prime_part(n, p), prime_part(s, p), prime_part(r, p), prime_part(o, p));
        m_p / r_p <= s_p && s_p <= n_p && (r_p <= s_p || n_p < s_p * o_p)
    });
    Ok(plus_ok)
}

/// A presentation `(m, n, s, t)` whose group has invariant `(m, n, s, Δ)`; the
/// returned `t` is the least possible one.
pub fn construct(m: u64, n: u64, s: u64, delta: &UnitSubgroup) -> Result<MetacyclicParams> {
    if !is_realizable(m, n, s, delta)? {
        return Err(Error::NotRealizable(format!("({m}, {n}, {s}, {delta})")));
    }
    if m == 1 {
        return MetacyclicParams::new(1, n, s, 0);
    }
    let inv = delta.inv_triple();
    let m_prime = delta.modulus();
    let pinned = pinned_residues(m, &inv);
    let mut best: Option<u64> = None;
    for g in delta.generators() {
        let mut system = pinned.clone();
        system.push((g, m_prime));
        if let Ok((t, modulus)) = arith::crt(&system) {
            debug_assert_eq!(modulus, m);
            best = Some(best.map_or(t, |b| b.min(t)));
        }
    }
    let t = best.ok_or_else(|| Error::Internal(format!("no generator of {delta} lifts modulo {m}")))?;
    let params = MetacyclicParams::new(m, n, s, t)
        .map_err(|e| Error::Internal(format!("lift {t} of {delta} is not a presentation: {e}")))?;
    let action = UnitSubgroup::from_unit(m, t);
    if action.inv_triple() != inv || action.residue_map(m_prime)? != *delta {
        return Err(Error::Internal(format!("lift {t} of {delta} changes the invariants")));
    }
    Ok(params)
}

/// Nilpotency via `o_G = 1`.
pub fn is_nilpotent(params: &MetacyclicParams) -> Result<bool> {
    Ok(order_invariant(params)? == 1)
}

/// Nilpotency read directly off an invariant list.
pub fn nilpotent_id(id: &MetacyclicId) -> bool {
    let MetacyclicId { m, n, s, t } = *id;
    if m == 0 || s == 0 || m % s != 0 || t >= m.max(1) {
        return false;
    }
    if m == 1 {
        return true;
    }
    if t == 1 && s == m && m <= n {
        return true;
    }
    let primes_m: Vec<u64> = Factorization::new(m).primes().collect();
    let same_primes = |r: u64| primes_m.iter().all(|&p| r.is_multiple_of(p));

    let r = gcd((t + m - 1) % m, m);
    if same_primes(r) && (m % 4 != 0 || r.is_multiple_of(4)) {
        if let Ok(l) = arith::lcm(r, m / r) {
            if s % l == 0 && n % s == 0 {
                return true;
            }
        }
    }

    let (m2, n2, s2) = (prime_part(m, 2), prime_part(n, 2), prime_part(s, 2));
    let (m_odd, n_odd, s_odd) = (m / m2, n / n2, s / s2);
    divisors(s_odd * m2).into_iter().any(|r| {
        let r2 = prime_part(r, 2);
        let r_odd = r / r2;
        same_primes(r)
            && r % 4 == 0
            && t % m_odd == (1 + r_odd) % m_odd
            && t % m2 == (r2 + m2 - 1) % m2
            && m_odd % r_odd == 0
            && s_odd % (m_odd / r_odd) == 0
            && n_odd % s_odd == 0
            && m2 % r2 == 0
            && (m2 / r2).max(2) <= n2
            && m2 <= 2 * s2
            && s2 != n2 * r2
            && !(n % 4 == 0 && m % 8 == 0 && r2 > s2)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(m: u64, n: u64, s: u64, t: u64) -> MetacyclicParams {
        MetacyclicParams::new(m, n, s, t).unwrap()
    }

    fn id(p: MetacyclicParams) -> (u64, u64, u64, u64) {
        metacyclic_id(&p).unwrap().as_tuple()
    }

    #[test]
    fn mcinv_examples() {
        assert_eq!(mcinv(&params(8, 48, 4, 5)).unwrap().as_tuple(), (8, 48, 4, 4, 1));
        assert_eq!(mcinv(&params(20, 4, 8, 11)).unwrap().as_tuple(), (4, 20, 4, 4, 3));
        assert_eq!(mcinv(&params(1, 5, 1, 0)).unwrap().as_tuple(), (1, 5, 1, 1, 0));
    }

    #[test]
    fn id_examples() {
        assert_eq!(id(params(20, 4, 8, 11)), (4, 20, 4, 3));
        assert_eq!(id(params(300, 30, 10, 181)), (50, 180, 10, 31));
        assert_eq!(id(params(100, 30, 10, 31)), (100, 30, 10, 31));
        assert_eq!(id(params(300, 10, 10, 31)), (100, 30, 10, 31));
        assert_eq!(id(params(8, 48, 4, 5)), (8, 48, 4, 5));
        assert_eq!(id(params(1, 200, 1, 0)), (1, 200, 1, 0));
    }

    #[test]
    fn isomorphism_examples() {
        assert!(!are_isomorphic(&params(100, 30, 10, 31), &params(300, 30, 10, 181)).unwrap());
        assert!(are_isomorphic(&params(300, 10, 10, 31), &params(100, 30, 10, 31)).unwrap());
        let p = params(20, 4, 8, 11);
        assert!(are_isomorphic(&p, &p).unwrap());
    }

    #[test]
    fn realizability_examples() {
        assert_eq!(is_realizable(8, 48, 4, &UnitSubgroup::trivial(4)), Ok(true));
        assert_eq!(is_realizable(4, 20, 8, &UnitSubgroup::cyclic(4, 3).unwrap()), Ok(false));
        assert_eq!(is_realizable(100, 2, 100, &UnitSubgroup::cyclic(100, 99).unwrap()), Ok(true));
        assert_eq!(is_realizable(4, 2, 2, &UnitSubgroup::trivial(2)), Ok(false));
        assert!(is_realizable(4, 2, 2, &UnitSubgroup::trivial(3)).is_err());
    }

    #[test]
    fn construct_examples() {
        assert_eq!(construct(8, 48, 4, &UnitSubgroup::trivial(4)).unwrap().as_tuple(), (8, 48, 4, 5));
        assert_eq!(construct(6, 12, 6, &UnitSubgroup::trivial(6)).unwrap().as_tuple(), (6, 12, 6, 1));
        assert_eq!(
            construct(100, 2, 100, &UnitSubgroup::cyclic(100, 99).unwrap()).unwrap().as_tuple(),
            (100, 2, 100, 99)
        );
        assert!(matches!(construct(4, 20, 8, &UnitSubgroup::cyclic(4, 3).unwrap()), Err(Error::NotRealizable(_))));
    }

    #[test]
    fn nilpotency_examples() {
        assert!(is_nilpotent(&params(1, 200, 1, 0)).unwrap());
        assert!(!is_nilpotent(&params(3, 2, 3, 2)).unwrap());
        assert!(is_nilpotent(&params(4, 4, 4, 3)).unwrap());
        assert!(nilpotent_id(&MetacyclicId { m: 1, n: 200, s: 1, t: 0 }));
        assert!(!nilpotent_id(&MetacyclicId { m: 3, n: 2, s: 3, t: 2 }));
    }
}

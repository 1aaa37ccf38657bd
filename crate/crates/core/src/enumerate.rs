//! One representative per isomorphism class of metacyclic groups of order `N`.
//!
//! First every sextuple `(m, n, s, r, ε, o)` that occurs as the data of a
//! minimal factorization is listed, then for each of them every matching Δ is
//! lifted to a presentation.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::arith::{self, divisors, gcd, part, prime_part, prime_set};
use crate::error::{Error, Result};
use crate::invariants::{construct, metacyclic_id, MetacyclicId};
use crate::units::{cyclic_subgroups_of_umns, m_prime_from, Sign, TInvariants, UnitSubgroup};

/// Largest order accepted by [`metacyclic_groups_by_order`] unless overridden.
pub const DEFAULT_ORDER_CAP: u64 = 100_000;

/// Data `(m, n, s, r, ε, o)` of a minimal factorization of some group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RealizableTuple {
    pub m: u64,
    pub n: u64,
    pub s: u64,
    pub r: u64,
    pub epsilon: Sign,
    pub o: u64,
}

impl RealizableTuple {
    pub fn invariants(&self) -> TInvariants {
        TInvariants { r: self.r, epsilon: self.epsilon, o: self.o }
    }

    fn holds(&self) -> bool {
        let RealizableTuple { m, n, s, r, epsilon, o } = *self;
        let m_primes = prime_set(m);
        let outside: Vec<u64> = m_primes.iter().copied().filter(|p| r % p != 0).collect();
        let inside: Vec<u64> = prime_set(m * n).into_iter().filter(|p| !outside.contains(p)).collect();
        let m_in = part(m, &inside);

        // divisibility
        if (r * n) % m_in != 0 || (r * s) % m_in != 0 || part(s, &outside) != part(m, &outside) {
            return false;
        }
        if m % 4 == 0 && r % 4 != 0 {
            return false;
        }
        // primes of r acted on by +1
        for p in prime_set(r) {
            if epsilon.pow_p_minus_one(p) == Sign::Minus {
                continue;
            }
            let (s_p, r_p, o_p) = (prime_part(s, p), prime_part(r, p), prime_part(o, p));
            if n % s_p != 0 || (s % r_p != 0 && n % (s_p * o_p) == 0) {
                return false;
            }
        }
        // the sign
        if epsilon == Sign::Minus {
            let (m2, n2, s2, r2, o2) = (prime_part(m, 2), prime_part(n, 2), prime_part(s, 2), prime_part(r, 2), prime_part(o, 2));
            if n % 2 != 0 || m % 4 != 0 || (2 * s) % m2 != 0 || s2 == n2 * r2 {
                return false;
            }
            if n % 4 == 0 && m % 8 == 0 && o2 < n2 && s % r2 != 0 {
                return false;
            }
        }
        // the order o is carried by primes outside r
        let exponent = outside.iter().try_fold(1u64, |acc, &q| arith::lcm(acc, q - 1));
        match exponent {
            Ok(e) if e % o == 0 => {}
            _ => return false,
        }
        outside.iter().all(|&q| {
            gcd(o, q - 1) != 1 || outside.iter().any(|&p| n % p == 0 && (q - 1) % p == 0)
        })
    }
}

/// Every realizable `(m, n, s, r, ε, o)` with `m n = N`, sorted.
pub fn parameter_tuples(order: u64) -> Vec<RealizableTuple> {
    let mut out = Vec::new();
    if order == 0 {
        return out;
    }
    for m in divisors(order) {
        let n = order / m;
        for s in divisors(m) {
            for r in divisors(m) {
                let outside: Vec<u64> = prime_set(m).into_iter().filter(|p| r % p != 0).collect();
                let inside: Vec<u64> = prime_set(order).into_iter().filter(|p| !outside.contains(p)).collect();
                for epsilon in [Sign::Plus, Sign::Minus] {
                    for o in divisors(part(n, &inside)) {
                        let tuple = RealizableTuple { m, n, s, r, epsilon, o };
                        if tuple.holds() {
                            out.push(tuple);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// A realizable tuple together with one matching Δ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub tuple: RealizableTuple,
    pub delta: UnitSubgroup,
}

/// Every `(tuple, Δ)` pair: Δ runs over the cyclic subgroups of `U_{m'}^{n,s'}`
/// with the tuple's `(r, ε, o)`, where `s' = s m' / m`.
pub fn candidates(order: u64) -> Result<Vec<Candidate>> {
    let mut out = Vec::new();
    for tuple in parameter_tuples(order) {
        let inv = tuple.invariants();
        let m_prime = m_prime_from(tuple.m, tuple.n, tuple.s, &inv);
        if !(tuple.s * m_prime).is_multiple_of(tuple.m) {
            return Err(Error::Internal(format!("m' = {m_prime} gives a fractional s' for {tuple:?}")));
        }
        let s_prime = tuple.s * m_prime / tuple.m;
        for delta in cyclic_subgroups_of_umns(m_prime, tuple.n, s_prime) {
            if delta.inv_triple() == inv {
                out.push(Candidate { tuple, delta });
            }
        }
    }
    Ok(out)
}

/// Invariant lists of all metacyclic groups of the given order, ascending.
pub fn metacyclic_groups_by_order(order: u64, cap: u64) -> Result<Vec<MetacyclicId>> {
    if order > cap {
        return Err(Error::CapExceeded { size: order, cap });
    }
    let mut ids = BTreeSet::new();
    for Candidate { tuple, delta } in candidates(order)? {
        let params = construct(tuple.m, tuple.n, tuple.s, &delta)?;
        ids.insert(metacyclic_id(&params)?);
    }
    Ok(ids.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_orders() {
        assert_eq!(
            parameter_tuples(1),
            [RealizableTuple { m: 1, n: 1, s: 1, r: 1, epsilon: Sign::Plus, o: 1 }]
        );
        let ids = metacyclic_groups_by_order(1, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(ids, [MetacyclicId { m: 1, n: 1, s: 1, t: 0 }]);
    }

    #[test]
    fn prime_orders_have_one_class() {
        for p in [2, 3, 5, 7, 11, 13] {
            assert!(parameter_tuples(p).iter().all(|t| t.r == t.m));
            assert_eq!(metacyclic_groups_by_order(p, DEFAULT_ORDER_CAP).unwrap().len(), 1);
        }
    }

    #[test]
    fn small_counts() {
        let count = |n| metacyclic_groups_by_order(n, DEFAULT_ORDER_CAP).unwrap().len();
        assert_eq!(count(4), 2);
        assert_eq!(count(6), 2);
        assert_eq!(count(8), 4);
        assert_eq!(count(100), 10);
        assert_eq!(count(200), 22);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(metacyclic_groups_by_order(1000, 999), Err(Error::CapExceeded { .. })));
    }
}

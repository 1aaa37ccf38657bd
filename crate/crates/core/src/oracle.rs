//! Brute-force ground truth over the element engine.
//!
//! Nothing here uses minimal factorizations or invariants: isomorphism is
//! decided by searching for generators satisfying the defining relations, and
//! kernels and the `(r, ε, o)` triple are found by scanning.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{divisors, gcd, mulmod, powmod, prime_part, Factorization};
use crate::engine::{MetacyclicGroup, MetacyclicParams, DEFAULT_CLOSURE_CAP};
use crate::error::{Error, Result};
use crate::units::{Sign, TInvariants, UnitSubgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest group order the oracle accepts.
    pub max_order: u64,
    pub closure_cap: u64,
    /// Skip candidates by element orders before checking relations.
    pub prune: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_order: 256, closure_cap: DEFAULT_CLOSURE_CAP, prune: true }
    }
}

impl OracleConfig {
    pub fn with_max_order(max_order: u64) -> Self {
        OracleConfig { max_order, closure_cap: max_order.max(DEFAULT_CLOSURE_CAP), ..Self::default() }
    }

    fn check(&self, order: u64) -> Result<()> {
        if order > self.max_order {
            Err(Error::CapExceeded { size: order, cap: self.max_order })
        } else {
            Ok(())
        }
    }
}

/// A group with its element orders cached.
#[derive(Debug, Clone)]
pub struct Tabulated {
    group: MetacyclicGroup,
    orders: Vec<u64>,
    profile: Vec<u64>,
}

impl Tabulated {
    pub fn new(params: MetacyclicParams) -> Self {
        let group = MetacyclicGroup::new(params);
        let orders = group.element_orders();
        let mut profile = orders.clone();
        profile.sort_unstable();
        Tabulated { group, orders, profile }
    }

    pub fn params(&self) -> &MetacyclicParams {
        self.group.params()
    }
}

/// Whether `G(p1) ≅ G(p2)`, by searching `G(p2)` for images of the generators of `G(p1)`.
pub fn brute_isomorphic(p1: &MetacyclicParams, p2: &MetacyclicParams, config: &OracleConfig) -> Result<bool> {
    if p1.order() != p2.order() {
        return Ok(false);
    }
    config.check(p1.order())?;
    isomorphic_tabulated(&Tabulated::new(*p1), &Tabulated::new(*p2), config)
}

pub fn isomorphic_tabulated(g1: &Tabulated, g2: &Tabulated, config: &OracleConfig) -> Result<bool> {
    let (m1, n1, s1, t1) = g1.params().as_tuple();
    let group = &g2.group;
    let size = group.order();
    if g1.params().order() != size {
        return Ok(false);
    }
    config.check(size)?;
    if config.prune && g1.profile != g2.profile {
        return Ok(false);
    }
    let order_b = n1 * (m1 / gcd(s1, m1));
    let identity = group.identity();
    for (ci, c) in group.elements().enumerate() {
        if config.prune {
            if g2.orders[ci] != m1 {
                continue;
            }
        } else if group.power_u(c, m1) != identity {
            continue;
        }
        let c_s = group.power_u(c, s1);
        let c_t = group.power_u(c, t1);
        for (di, d) in group.elements().enumerate() {
            if config.prune && g2.orders[di] != order_b {
                continue;
            }
            if group.conjugate(c, d) != c_t || group.power_u(d, n1) != c_s {
                continue;
            }
            if group.closure_size(c, d, config.closure_cap)? == size {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Every valid `(m, n, s, t)` with `m n = N`, `1 ≤ s ≤ m` and `0 ≤ t < m`.
pub fn all_parameter_tuples(order: u64, config: &OracleConfig) -> Result<Vec<MetacyclicParams>> {
    config.check(order)?;
    let mut out = Vec::new();
    for m in divisors(order) {
        let n = order / m;
        for t in 0..m {
            if (m > 1 && gcd(t, m) != 1) || powmod(t, n, m) != 1 % m {
                continue;
            }
            // m | s(t-1) exactly for the multiples of m / gcd(m, t-1)
            let step = m / gcd(m, (t + m - 1) % m);
            for s in (step..=m).step_by(step as usize) {
                out.push(MetacyclicParams::new(m, n, s, t)?);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Isomorphism classes of all presentations of order `N`, each class in input
/// order and classes ordered by their first member.
pub fn brute_classes(order: u64, config: &OracleConfig) -> Result<Vec<Vec<MetacyclicParams>>> {
    let tuples = all_parameter_tuples(order, config)?;
    let mut reps: Vec<Tabulated> = Vec::new();
    let mut classes: Vec<Vec<MetacyclicParams>> = Vec::new();
    for p in tuples {
        let tab = Tabulated::new(p);
        let mut found = None;
        for (k, rep) in reps.iter().enumerate() {
            if isomorphic_tabulated(rep, &tab, config)? {
                found = Some(k);
                break;
            }
        }
        match found {
            Some(k) => classes[k].push(p),
            None => {
                reps.push(tab);
                classes.push(vec![p]);
            }
        }
    }
    Ok(classes)
}

/// `(r, ε, o)` straight from its definition, by scanning divisors of `m`.
pub fn inv_triple_by_definition(action: &UnitSubgroup) -> TInvariants {
    let m = action.modulus();
    let elements = action.elements();
    let admissible = |d: u64| {
        let d2 = prime_part(d, 2);
        let d_odd = d / d2;
        elements.iter().all(|&x| x % d_odd == 1 % d_odd && (x % d2 == 1 % d2 || (x + 1) % d2 == 0))
    };
    let r = divisors(m).into_iter().rev().find(|&d| admissible(d)).unwrap_or(1);
    let r2 = prime_part(r, 2);
    let epsilon = if elements.iter().any(|&x| x % r2 != 1 % r2) { Sign::Minus } else { Sign::Plus };

    let nu: Vec<u64> = Factorization::new(m).primes().filter(|p| r % p != 0).collect();
    let nu_part = |k: u64| nu.iter().fold(1, |acc, &p| acc * prime_part(k, p));
    let m_nu = nu_part(m);
    // the ν'-part of T is generated by g^{|T|_ν}
    let mut h = 1 % m;
    for _ in 0..nu_part(action.order()) {
        h = mulmod(h, action.generator(), m);
    }
    let image = h % m_nu;
    let mut o = 1;
    let mut x = image;
    while x != 1 % m_nu {
        x = mulmod(x, image, m_nu);
        o += 1;
    }
    TInvariants { r, epsilon, o }
}

/// Least order of a cyclic normal subgroup with cyclic quotient, by scanning
/// every cyclic subgroup.
pub fn min_kernel_order(params: &MetacyclicParams, config: &OracleConfig) -> Result<u64> {
    config.check(params.order())?;
    let group = MetacyclicGroup::new(*params);
    let size = group.order();
    let orders = group.element_orders();
    let mut by_order: Vec<usize> = (0..size as usize).collect();
    by_order.sort_by_key(|&k| orders[k]);
    let mut done = vec![false; size as usize];
    let mut member = vec![false; size as usize];
    let (a, b) = (group.a(), group.b());
    for k in by_order {
        if done[k] {
            continue;
        }
        let g = group.from_index(k);
        let ord = orders[k];
        let mut powers = Vec::with_capacity(ord as usize);
        let mut x = group.identity();
        for e in 0..ord {
            member[group.index(x)] = true;
            if gcd(e, ord) == 1 {
                done[group.index(x)] = true;
            }
            powers.push(x);
            x = group.multiply(x, g);
        }
        let normal = member[group.index(group.conjugate(g, a))] && member[group.index(group.conjugate(g, b))];
        if normal && has_cyclic_quotient(&group, &member, size / ord) {
            return Ok(ord);
        }
        for x in powers {
            member[group.index(x)] = false;
        }
    }
    Err(Error::Internal("no cyclic kernel found".into()))
}

fn has_cyclic_quotient(group: &MetacyclicGroup, member: &[bool], index: u64) -> bool {
    let primes: Vec<u64> = Factorization::new(index).primes().collect();
    group.elements().any(|h| primes.iter().all(|&p| !member[group.index(group.power_u(h, index / p))]))
}

/// Orders of elements as a sorted list, for quick non-isomorphism checks.
pub fn order_profile(params: &MetacyclicParams) -> Vec<u64> {
    Tabulated::new(*params).profile
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(m: u64, n: u64, s: u64, t: u64) -> MetacyclicParams {
        MetacyclicParams::new(m, n, s, t).unwrap()
    }

    #[test]
    fn isomorphism_examples() {
        let cfg = OracleConfig::default();
        let p = params(20, 4, 8, 11);
        assert_eq!(brute_isomorphic(&p, &p, &cfg), Ok(true));
        assert_eq!(brute_isomorphic(&params(4, 2, 4, 3), &params(4, 2, 2, 3), &cfg), Ok(false));
        assert_eq!(brute_isomorphic(&p, &params(4, 20, 4, 3), &cfg), Ok(true));
        let unpruned = OracleConfig { prune: false, ..cfg };
        assert_eq!(brute_isomorphic(&p, &params(4, 20, 4, 3), &unpruned), Ok(true));
        assert_eq!(brute_isomorphic(&params(4, 2, 4, 3), &params(4, 2, 2, 3), &unpruned), Ok(false));
    }

    #[test]
    fn parameter_tuples_small() {
        let cfg = OracleConfig::default();
        let tuples: Vec<_> = all_parameter_tuples(1, &cfg).unwrap().iter().map(|p| p.as_tuple()).collect();
        assert_eq!(tuples, [(1, 1, 1, 0)]);
        let tuples: Vec<_> = all_parameter_tuples(2, &cfg).unwrap().iter().map(|p| p.as_tuple()).collect();
        assert_eq!(tuples, [(1, 2, 1, 0), (2, 1, 1, 1), (2, 1, 2, 1)]);
        assert!(all_parameter_tuples(300, &cfg).is_err());
    }

    #[test]
    fn classical_class_counts() {
        let cfg = OracleConfig::default();
        assert_eq!(brute_classes(4, &cfg).unwrap().len(), 2);
        assert_eq!(brute_classes(6, &cfg).unwrap().len(), 2);
        assert_eq!(brute_classes(8, &cfg).unwrap().len(), 4);
    }

    #[test]
    fn definitional_triples() {
        let t = UnitSubgroup::cyclic(10, 3).unwrap();
        assert_eq!(inv_triple_by_definition(&t), TInvariants { r: 2, epsilon: Sign::Plus, o: 4 });
        let t = UnitSubgroup::cyclic(20, 11).unwrap();
        assert_eq!(inv_triple_by_definition(&t), TInvariants { r: 20, epsilon: Sign::Minus, o: 1 });
    }

    #[test]
    fn kernels() {
        let cfg = OracleConfig::with_max_order(512);
        assert_eq!(min_kernel_order(&params(20, 4, 8, 11), &cfg), Ok(4));
        assert_eq!(min_kernel_order(&params(1, 12, 1, 0), &cfg), Ok(1));
        assert_eq!(min_kernel_order(&params(3, 2, 3, 2), &cfg), Ok(3));
    }
}

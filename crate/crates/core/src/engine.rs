//! Concrete arithmetic in `G(m,n,s,t) = ⟨a, b | a^m = 1, b^n = a^s, a^b = a^t⟩`.
//!
//! Every element has a unique normal form `b^i a^j` with `0 ≤ i < n` and
//! `0 ≤ j < m`. Since `a^j b^i = b^i a^(j t^i)` and `b^n = a^s` is central,
//!
//! ```text
//! (b^i1 a^j1)(b^i2 a^j2) = b^ρ a^(j1 t^i2 + j2 + s q),   i1 + i2 = q n + ρ.
//! ```

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{self, gcd, mulmod, powmod, Factorization};
use crate::error::{Error, Result};

/// Default bound on group orders for closure computations.
pub const DEFAULT_CLOSURE_CAP: u64 = 4096;

/// A validated presentation tuple `(m, n, s, t)`.
///
/// `t` and `s` are stored reduced modulo `m`, with `s` taken in `1..=m` and
/// `t = 0` when `m = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MetacyclicParams {
    m: u64,
    n: u64,
    s: u64,
    t: u64,
}

impl MetacyclicParams {
    /// Checks `gcd(t, m) = 1`, `t^n ≡ 1` and `s(t-1) ≡ 0 (mod m)`.
    pub fn new(m: u64, n: u64, s: u64, t: u64) -> Result<Self> {
        let invalid = |reason: alloc::string::String| Error::InvalidParams { m, n, s, t, reason };
        if m == 0 || n == 0 {
            return Err(invalid("m and n must be positive".into()));
        }
        if m.checked_mul(n).is_none() {
            return Err(Error::Overflow);
        }
        let t_red = t % m;
        let s_red = match s % m {
            0 => m,
            x => x,
        };
        let g = gcd(t_red, m);
        if g != 1 {
            return Err(invalid(format!("gcd(t, m) = {g} != 1")));
        }
        if powmod(t_red, n, m) != 1 % m {
            return Err(invalid(format!("t^n = {} != 1 (mod {m})", powmod(t_red, n, m))));
        }
        if mulmod(s_red, (t_red + m - 1) % m, m) != 0 {
            return Err(invalid(format!("s(t-1) is not divisible by {m}")));
        }
        Ok(MetacyclicParams { m, n, s: s_red, t: t_red })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `|G(m,n,s,t)| = m n`.
    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    pub fn as_tuple(&self) -> (u64, u64, u64, u64) {
        (self.m, self.n, self.s, self.t)
    }
}

impl fmt::Display for MetacyclicParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.m, self.n, self.s, self.t)
    }
}

/// The normal form `b^i a^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GroupElement {
    pub i: u64,
    pub j: u64,
}

/// Data read off a metacyclic factorization `G = ⟨a⟩⟨b⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorizationData {
    /// `|⟨a⟩|`
    pub m: u64,
    /// `[G : ⟨a⟩]`
    pub n: u64,
    /// `[G : ⟨b⟩]`
    pub s: u64,
    /// `a^b = a^t`
    pub t: u64,
    /// `b^n = a^y`
    pub y: u64,
}

/// The group `G(m,n,s,t)` with precomputed powers of `t`.
#[derive(Debug, Clone)]
pub struct MetacyclicGroup {
    params: MetacyclicParams,
    order: Factorization,
    t_powers: Vec<u64>,
}

impl MetacyclicGroup {
    pub fn new(params: MetacyclicParams) -> Self {
        let (m, n, _, t) = params.as_tuple();
        let mut t_powers = Vec::with_capacity(n as usize);
        let mut x = 1 % m;
        for _ in 0..n {
            t_powers.push(x);
            x = mulmod(x, t, m);
        }
        MetacyclicGroup { params, order: Factorization::new(m * n), t_powers }
    }

    pub fn params(&self) -> &MetacyclicParams {
        &self.params
    }

    pub fn order(&self) -> u64 {
        self.order.value()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::default()
    }

    pub fn a(&self) -> GroupElement {
        GroupElement { i: 0, j: 1 % self.params.m }
    }

    pub fn b(&self) -> GroupElement {
        self.element(1, 0)
    }

    /// `b^i a^j`, reducing the exponents (`b^n = a^s`).
    pub fn element(&self, i: u64, j: u64) -> GroupElement {
        let (m, n, s, _) = self.params.as_tuple();
        let q = i / n;
        GroupElement { i: i % n, j: (j % m + mulmod(s, q % m, m)) % m }
    }

    /// Position of `x` in `0..|G|`.
    pub fn index(&self, x: GroupElement) -> usize {
        (x.i * self.params.m + x.j) as usize
    }

    pub fn from_index(&self, k: usize) -> GroupElement {
        let m = self.params.m;
        GroupElement { i: k as u64 / m, j: k as u64 % m }
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order() as usize).map(|k| self.from_index(k))
    }

    pub fn multiply(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        let (m, n, s, _) = self.params.as_tuple();
        let sum = x.i + y.i;
        let (q, rho) = if sum >= n { (1, sum - n) } else { (0, sum) };
        let j = (mulmod(x.j, self.t_powers[y.i as usize], m) as u128
            + y.j as u128
            + if q == 1 { s as u128 } else { 0 })
            % m as u128;
        GroupElement { i: rho, j: j as u64 }
    }

    pub fn inverse(&self, x: GroupElement) -> GroupElement {
        let (m, n, s, _) = self.params.as_tuple();
        if x.i == 0 {
            return GroupElement { i: 0, j: (m - x.j) % m };
        }
        // (b^i a^j)^-1 = a^-j b^(n-i) a^-s = b^(n-i) a^(-j t^(n-i) - s)
        let k = n - x.i;
        let jt = mulmod(x.j, self.t_powers[k as usize], m);
        GroupElement { i: k, j: (2 * m - jt - s % m) % m }
    }

    pub fn power(&self, x: GroupElement, e: i64) -> GroupElement {
        let base = if e < 0 { self.inverse(x) } else { x };
        self.power_u(base, e.unsigned_abs())
    }

    pub(crate) fn power_u(&self, x: GroupElement, mut e: u64) -> GroupElement {
        let mut acc = self.identity();
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.multiply(base, base);
            }
        }
        acc
    }

    pub fn order_of(&self, x: GroupElement) -> u64 {
        let mut d = self.order();
        for p in self.order.primes() {
            while d.is_multiple_of(p) && self.power_u(x, d / p) == self.identity() {
                d /= p;
            }
        }
        d
    }

    /// The `p`-part of `x`: the power of `x` of `p`-power order with
    /// `x = x_p x_{p'}`.
    pub fn p_part(&self, x: GroupElement, p: u64) -> GroupElement {
        let (k, _) = self.part_exponents(x, p);
        self.power_u(x, k)
    }

    /// The `p'`-part of `x`.
    pub fn p_prime_part(&self, x: GroupElement, p: u64) -> GroupElement {
        let (_, k) = self.part_exponents(x, p);
        self.power_u(x, k)
    }

    fn part_exponents(&self, x: GroupElement, p: u64) -> (u64, u64) {
        let ord = self.order_of(x);
        let op = arith::prime_part(ord, p);
        let rest = ord / op;
        let (k, _) = arith::crt(&[(1, op), (0, rest)]).expect("coprime moduli");
        let (k2, _) = arith::crt(&[(0, op), (1, rest)]).expect("coprime moduli");
        (k, k2)
    }

    /// `g^h = h^-1 g h`.
    pub fn conjugate(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        self.multiply(self.multiply(self.inverse(h), g), h)
    }

    /// Least `k ≥ 0` with `base^k = target`, if any.
    pub fn dlog(&self, base: GroupElement, target: GroupElement) -> Option<u64> {
        let mut x = self.identity();
        let mut k = 0;
        loop {
            if x == target {
                return Some(k);
            }
            x = self.multiply(x, base);
            k += 1;
            if x == self.identity() {
                return None;
            }
        }
    }

    /// `|⟨g, h⟩|` by breadth-first closure; fails when `|G|` exceeds `cap`.
    pub fn closure_size(&self, g: GroupElement, h: GroupElement, cap: u64) -> Result<u64> {
        if self.order() > cap {
            return Err(Error::CapExceeded { size: self.order(), cap });
        }
        let mut seen = vec![false; self.order() as usize];
        let mut queue = vec![self.identity()];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = queue.pop() {
            for gen in [g, h] {
                let y = self.multiply(x, gen);
                let k = self.index(y);
                if !seen[k] {
                    seen[k] = true;
                    count += 1;
                    queue.push(y);
                }
            }
        }
        Ok(count)
    }

    /// Reads `(|A|, [G:A], [G:B], t, y)` off `G = ⟨a⟩⟨b⟩` after checking that it is
    /// a metacyclic factorization.
    pub fn factorization_data(&self, a: GroupElement, b: GroupElement) -> Result<FactorizationData> {
        let cyclic = CyclicSubgroup::new(self, a);
        let t = cyclic
            .log(self.conjugate(a, b))
            .ok_or(Error::NotFactorization("b does not normalize <a>"))?;
        if cyclic.log(self.conjugate(a, self.inverse(b))).is_none() {
            return Err(Error::NotFactorization("b^-1 does not normalize <a>"));
        }
        let m = cyclic.order();
        let index = self.order() / m;
        // least k with b^k in <a> is |b| / |<a> ∩ <b>|; G = AB iff it equals [G:A]
        let mut k = 1;
        let mut x = b;
        while !cyclic.contains(x) {
            x = self.multiply(x, b);
            k += 1;
        }
        if k != index {
            return Err(Error::NotFactorization("<a><b> is a proper subset of G"));
        }
        let y = cyclic.log(x).expect("b^n lies in <a>");
        Ok(FactorizationData { m, n: index, s: self.order() / self.order_of(b), t, y })
    }

    /// Orders of all elements, indexed by [`MetacyclicGroup::index`].
    pub fn element_orders(&self) -> Vec<u64> {
        self.elements().map(|x| self.order_of(x)).collect()
    }
}

/// The powers of one element, with logarithms.
#[derive(Debug, Clone)]
pub struct CyclicSubgroup {
    logs: BTreeMap<GroupElement, u64>,
}

impl CyclicSubgroup {
    pub fn new(group: &MetacyclicGroup, generator: GroupElement) -> Self {
        let mut logs = BTreeMap::new();
        let mut x = group.identity();
        let mut k = 0;
        loop {
            logs.insert(x, k);
            x = group.multiply(x, generator);
            k += 1;
            if x == group.identity() {
                break;
            }
        }
        CyclicSubgroup { logs }
    }

    pub fn order(&self) -> u64 {
        self.logs.len() as u64
    }

    pub fn contains(&self, x: GroupElement) -> bool {
        self.logs.contains_key(&x)
    }

    pub fn log(&self, x: GroupElement) -> Option<u64> {
        self.logs.get(&x).copied()
    }
}

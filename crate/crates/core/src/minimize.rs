//! Minimal metacyclic factorizations.
//!
//! Starting from the defining generators of `G(m,n,s,t)`, the generators are
//! rewritten prime by prime until the kernel `⟨a⟩` has least possible order and
//! `⟨b⟩` least possible index. After every rewrite the indices are re-read from
//! the group itself and compared with the expected values.

use alloc::format;
use alloc::vec::Vec;

use crate::arith::{self, prime_part, Factorization};
use crate::engine::{GroupElement, MetacyclicGroup, MetacyclicParams};
use crate::error::{Error, Result};
use crate::units::{in_umns, Sign, TInvariants, UnitSubgroup};

/// Order in which the primes of `r` are visited in the main loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrimeOrder {
    #[default]
    Ascending,
    Descending,
}

/// A minimal factorization `G = ⟨a⟩⟨b⟩` with its data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinimalFactorization {
    pub a: GroupElement,
    pub b: GroupElement,
    /// `|a|`
    pub m: u64,
    /// `[G : ⟨a⟩]`
    pub n: u64,
    /// `[G : ⟨b⟩]`
    pub s: u64,
    /// `a^b = a^t`
    pub t: u64,
    /// `b^n = a^y`
    pub y: u64,
    pub invariants: TInvariants,
}

impl MinimalFactorization {
    /// `⟨t⟩_m`.
    pub fn action(&self) -> UnitSubgroup {
        UnitSubgroup::from_unit(self.m, self.t)
    }

    /// The presentation read off the factorization.
    pub fn params(&self) -> MetacyclicParams {
        MetacyclicParams::new(self.m, self.n, self.y, self.t).expect("factorization yields a valid presentation")
    }
}

/// True when `T ≤ U_m` is `(n, s)`-canonical.
pub fn is_canonical(m: u64, n: u64, s: u64, action: &UnitSubgroup) -> Result<bool> {
    if m == 0 || n == 0 || s == 0 {
        return Err(Error::Precondition("m, n and s must be positive".into()));
    }
    if !m.is_multiple_of(s) {
        return Err(Error::Precondition(format!("s = {s} does not divide m = {m}")));
    }
    if action.modulus() != m {
        return Err(Error::Precondition(format!("subgroup modulus {} differs from m = {m}", action.modulus())));
    }
    if !in_umns(action.generator() as i64, m, n, s) {
        return Err(Error::Precondition("subgroup is not contained in U_m^{n,s}".into()));
    }
    Ok(canonical_triple(m, n, s, &action.inv_triple()))
}

pub(crate) fn canonical_triple(m: u64, n: u64, s: u64, inv: &TInvariants) -> bool {
    let TInvariants { r, epsilon, o } = *inv;
    if epsilon == Sign::Minus {
        let (m2, n2, s2, r2, o2) = (prime_part(m, 2), prime_part(n, 2), prime_part(s, 2), prime_part(r, 2), prime_part(o, 2));
        if s2 == r2 * n2 {
            return false;
        }
        if m2 >= 8 && n2 >= 4 && o2 < n2 && r2 > s2 {
            return false;
        }
    }
    Factorization::new(r).primes().filter(|&p| epsilon.pow_p_minus_one(p) == Sign::Plus).all(|p| {
        let (s_p, r_p, o_p) = (prime_part(s, p), prime_part(r, p), prime_part(o, p));
        n.is_multiple_of(s_p) && (s.is_multiple_of(r_p) || !n.is_multiple_of(s_p * o_p))
    })
}

/// A minimal factorization of `G(params)`, visiting primes in ascending order.
pub fn minimize(params: &MetacyclicParams) -> Result<MinimalFactorization> {
    minimize_with(params, PrimeOrder::Ascending)
}

/// [`minimize`] with an explicit prime order for the main loop.
pub fn minimize_with(params: &MetacyclicParams, order: PrimeOrder) -> Result<MinimalFactorization> {
    let group = MetacyclicGroup::new(*params);
    let mut state = State::read(&group, group.a(), group.b())?;

    let mut primes: Vec<u64> = Factorization::new(state.inv.r).primes().collect();
    if order == PrimeOrder::Descending {
        primes.reverse();
    }
    for p in primes {
        if state.inv.epsilon.pow_p_minus_one(p) == Sign::Minus {
            continue;
        }
        let s_p = prime_part(state.s, p);
        if state.n % s_p != 0 {
            let a_p = group.p_part(state.a, p);
            let expected_s = state.s / s_p * prime_part(state.n, p);
            let next = State::read(&group, state.a, group.multiply(state.b, a_p))?;
            next.expect("s after b := b a_p", next.s, expected_s)?;
            next.expect("m after b := b a_p", next.m, state.m)?;
            state = next;
        }
        let (m, n, s, r, o) = (state.m, state.n, state.s, state.inv.r, state.inv.o);
        let (m_p, s_p, r_p, o_p) = (prime_part(m, p), prime_part(s, p), prime_part(r, p), prime_part(o, p));
        if s % r_p != 0 && n % (s_p * o_p) == 0 {
            let a_p = group.p_part(state.a, p);
            let b_p = group.p_part(state.b, p);
            let t_p = group
                .dlog(a_p, group.conjugate(a_p, b_p))
                .ok_or_else(|| Error::Internal("b_p does not normalize <a_p>".into()))?;
            let step = arith::powmod(t_p % m_p, n / s_p, m_p);
            let coeff = arith::ese(step as i64, s_p, m_p);
            let rhs = (r % m_p) as i64 - (state.y % m_p) as i64;
            let x = arith::solve_linear(coeff as i64, rhs, m_p)
                .map_err(|_| Error::Internal(format!("no x with x S({step}, {s_p}) = {rhs} mod {m_p}")))?;
            let a = group.multiply(
                group.multiply(group.power_u(b_p, n / s_p), group.p_prime_part(state.a, p)),
                group.power_u(a_p, x),
            );
            let expected = if m % 8 == 0 && s_p == 2 && prime_part(r, 2) == m_p / 2 {
                TInvariants { r: 4 * (r / prime_part(r, 2)), epsilon: Sign::Minus, o }
            } else {
                TInvariants { r: r / r_p * s_p, epsilon: if p == 2 { Sign::Plus } else { state.inv.epsilon }, o }
            };
            let next = State::read(&group, a, state.b)?;
            next.expect("m after kernel swap", next.m, s_p * m / r_p)?;
            next.expect("n after kernel swap", next.n, n * r_p / s_p)?;
            next.expect("s after kernel swap", next.s, s)?;
            next.expect("r after kernel swap", next.inv.r, expected.r)?;
            if next.inv.epsilon != expected.epsilon {
                return Err(Error::Internal(format!("sign after kernel swap at p = {p}")));
            }
            state = next;
        }
    }

    let (m, n, s, inv) = (state.m, state.n, state.s, state.inv);
    if inv.epsilon == Sign::Minus
        && n % 4 == 0
        && m % 8 == 0
        && prime_part(inv.o, 2) < prime_part(n, 2)
        && s % prime_part(inv.r, 2) != 0
    {
        let (m_odd, s_odd) = (m / prime_part(m, 2), s / prime_part(s, 2));
        let exponent = m_odd * n / (2 * s_odd);
        let a = group.multiply(group.power_u(state.b, exponent), state.a);
        let next = State::read(&group, a, state.b)?;
        next.expect("m after sign step", next.m, m)?;
        next.expect("r after sign step", next.inv.r, inv.r / prime_part(inv.r, 2) * prime_part(s, 2))?;
        state = next;
    }

    if state.inv.epsilon == Sign::Minus
        && prime_part(state.s, 2) == prime_part(state.inv.r, 2) * prime_part(state.n, 2)
    {
        let a_2 = group.p_part(state.a, 2);
        let next = State::read(&group, state.a, group.multiply(state.b, a_2))?;
        next.expect("s after b := b a_2", next.s, state.s / 2)?;
        state = next;
    }

    if !canonical_triple(state.m, state.n, state.s, &state.inv) {
        return Err(Error::Internal(format!("result for {params} is not canonical")));
    }
    Ok(MinimalFactorization {
        a: state.a,
        b: state.b,
        m: state.m,
        n: state.n,
        s: state.s,
        t: state.t,
        y: state.y,
        invariants: state.inv,
    })
}

/// `o_G = 1` exactly for nilpotent groups.
pub(crate) fn order_invariant(params: &MetacyclicParams) -> Result<u64> {
    Ok(minimize(params)?.invariants.o)
}

struct State {
    a: GroupElement,
    b: GroupElement,
    m: u64,
    n: u64,
    s: u64,
    t: u64,
    y: u64,
    inv: TInvariants,
}

impl State {
    fn read(group: &MetacyclicGroup, a: GroupElement, b: GroupElement) -> Result<Self> {
        let data = group.factorization_data(a, b)?;
        let inv = UnitSubgroup::from_unit(data.m, data.t).inv_triple();
        Ok(State { a, b, m: data.m, n: data.n, s: data.s, t: data.t, y: data.y, inv })
    }

    fn expect(&self, what: &str, got: u64, want: u64) -> Result<()> {
        if got == want {
            Ok(())
        } else {
            Err(Error::Internal(format!("{what}: got {got}, expected {want}")))
        }
    }
}

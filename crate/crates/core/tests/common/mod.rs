#![allow(dead_code)]

use metacyclic::arith::gcd;
use metacyclic::MetacyclicParams;
use proptest::prelude::*;

/// All valid presentations with the given `m` and `n`, `1 ≤ s ≤ m`, `0 ≤ t < m`.
pub fn presentations(m: u64, n: u64) -> Vec<MetacyclicParams> {
    let mut out = Vec::new();
    for t in 0..m {
        if m > 1 && gcd(t, m) != 1 {
            continue;
        }
        for s in 1..=m {
            if let Ok(p) = MetacyclicParams::new(m, n, s, t) {
                if p.s() == s && p.t() == t {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// A valid presentation of order at most `max_order`.
pub fn params_up_to(max_order: u64) -> impl Strategy<Value = MetacyclicParams> {
    (1..=max_order)
        .prop_flat_map(|order| {
            let ms: Vec<u64> = (1..=order).filter(|m| order % m == 0).collect();
            (Just(order), proptest::sample::select(ms))
        })
        .prop_flat_map(|(order, m)| {
            let list = presentations(m, order / m);
            proptest::sample::select(list)
        })
}

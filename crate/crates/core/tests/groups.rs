mod common;

use common::{params_up_to, presentations};
use metacyclic::arith::ese;
use metacyclic::engine::DEFAULT_CLOSURE_CAP;
use metacyclic::{MetacyclicGroup, MetacyclicParams};
use proptest::prelude::*;

fn all_up_to(max_order: u64) -> Vec<MetacyclicParams> {
    (1..=max_order)
        .flat_map(|order| (1..=order).filter(move |m| order % m == 0).flat_map(move |m| presentations(m, order / m)))
        .collect()
}

#[test]
fn associativity_exhaustive_up_to_64() {
    for p in all_up_to(64) {
        let g = MetacyclicGroup::new(p);
        let els: Vec<_> = g.elements().collect();
        for &x in &els {
            for &y in &els {
                let xy = g.multiply(x, y);
                for &z in &els {
                    assert_eq!(g.multiply(xy, z), g.multiply(x, g.multiply(y, z)), "{p}");
                }
            }
        }
    }
}

#[test]
fn normal_form_count_up_to_512() {
    for p in all_up_to(512) {
        let g = MetacyclicGroup::new(p);
        assert_eq!(g.closure_size(g.a(), g.b(), DEFAULT_CLOSURE_CAP).unwrap(), p.order(), "{p}");
    }
}

#[test]
fn relations_and_order_of_a() {
    for p in all_up_to(200) {
        let g = MetacyclicGroup::new(p);
        let (m, n, s, t) = p.as_tuple();
        assert_eq!(g.power(g.b(), n as i64), g.power(g.a(), s as i64), "{p}");
        assert_eq!(g.conjugate(g.a(), g.b()), g.power(g.a(), t as i64), "{p}");
        assert_eq!(g.order_of(g.a()), m, "{p}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn associativity_sampled(p in params_up_to(2000), seeds in proptest::collection::vec((any::<u64>(), any::<u64>(), any::<u64>()), 50)) {
        let g = MetacyclicGroup::new(p);
        let size = p.order() as usize;
        for (x, y, z) in seeds {
            let (x, y, z) = (g.from_index(x as usize % size), g.from_index(y as usize % size), g.from_index(z as usize % size));
            prop_assert_eq!(g.multiply(g.multiply(x, y), z), g.multiply(x, g.multiply(y, z)));
            prop_assert_eq!(g.multiply(x, g.inverse(x)), g.identity());
        }
    }

    #[test]
    fn power_identity(p in params_up_to(1000), hi in any::<u64>(), gi in any::<u64>(), k in 0u64..=50) {
        let group = MetacyclicGroup::new(p);
        let size = p.order() as usize;
        let h = group.from_index(hi as usize % size);
        let g = group.from_index(gi as usize % size);
        // only pairs with g^h a power of g
        if let Some(c) = group.dlog(g, group.conjugate(g, h)) {
            let lhs = group.power(group.multiply(h, g), k as i64);
            let modulus = group.order_of(g);
            let rhs = group.multiply(group.power(h, k as i64), group.power(g, ese(c as i64, k, modulus) as i64));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn powers_add(p in params_up_to(1000), xi in any::<u64>(), e1 in -200i64..200, e2 in -200i64..200) {
        let g = MetacyclicGroup::new(p);
        let x = g.from_index(xi as usize % p.order() as usize);
        prop_assert_eq!(g.multiply(g.power(x, e1), g.power(x, e2)), g.power(x, e1 + e2));
        prop_assert_eq!(g.power(x, g.order_of(x) as i64), g.identity());
    }
}

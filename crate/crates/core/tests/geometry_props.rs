use num_integer::Integer;
use proptest::prelude::*;

use polybn_core::enumeration::{relaxation, search_interior_witness};
use polybn_core::lattice::{
    convex_hull, equivalent, is_standard_simplex_multiple, lattice_width, normal_form,
    normal_form_with_map, width_along, AffineUnimodularMap, LatticePoint, LatticePolygon,
    PrimitiveVector,
};
use polybn_core::toric_bn::width_from_interior;
use polybn_core::{BigInt, Polygon, SmallPolygon};

fn points(side: i64, max: usize) -> impl Strategy<Value = Vec<LatticePoint<i64>>> {
    prop::collection::vec((0..=side, 0..=side), 1..=max).prop_map(|v| {
        v.into_iter()
            .map(|(x, y)| LatticePoint::new(x, y))
            .collect()
    })
}

fn hull(side: i64, max: usize) -> impl Strategy<Value = SmallPolygon> {
    points(side, max).prop_map(|p| convex_hull(&p))
}

fn full_hull(side: i64, max: usize) -> impl Strategy<Value = SmallPolygon> {
    prop::collection::vec((0..=side, 0..=side), 3..=max)
        .prop_map(|v| LatticePolygon::from_i64_pairs(&v))
        .prop_filter("full", |p| p.is_full())
}

/// Products of shears, swaps and sign flips, kept to entries in [-10, 10].
fn unimodular() -> impl Strategy<Value = AffineUnimodularMap<i64>> {
    (
        prop::collection::vec((0u8..4, -3i64..=3), 0..6),
        -10i64..=10,
        -10i64..=10,
    )
        .prop_filter_map("entries in range", |(steps, tx, ty)| {
            let mut m = [[1i64, 0], [0, 1]];
            for (kind, k) in steps {
                let e = match kind {
                    0 => [[1, k], [0, 1]],
                    1 => [[1, 0], [k, 1]],
                    2 => [[0, 1], [1, 0]],
                    _ => [[-1, 0], [0, 1]],
                };
                m = [
                    [
                        e[0][0] * m[0][0] + e[0][1] * m[1][0],
                        e[0][0] * m[0][1] + e[0][1] * m[1][1],
                    ],
                    [
                        e[1][0] * m[0][0] + e[1][1] * m[1][0],
                        e[1][0] * m[0][1] + e[1][1] * m[1][1],
                    ],
                ];
            }
            if m.iter().flatten().any(|v| v.abs() > 10) {
                return None;
            }
            AffineUnimodularMap::from_i64(m, [tx, ty]).ok()
        })
}

/// Width by trying every primitive direction with entries up to `bound`.
fn brute_width(p: &SmallPolygon, bound: i64) -> i64 {
    let mut best = i64::MAX;
    for a in -bound..=bound {
        for b in 0..=bound {
            if (a, b) == (0, 0) || a.gcd(&b) != 1 {
                continue;
            }
            let u = PrimitiveVector::new(a, b).unwrap();
            best = best.min(width_along(p, &u).unwrap());
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn pick_and_area_bound(p in full_hull(20, 9)) {
        let a2 = p.area_twice();
        prop_assert_eq!(a2, p.boundary_count() + 2 * p.count_interior_points() - 2);
        prop_assert_eq!(a2, p.pick_area_twice().unwrap());
        let lw = lattice_width(&p).width;
        prop_assert!(4 * a2 >= 3 * lw * lw);
    }

    #[test]
    fn hull_is_idempotent(p in hull(20, 12)) {
        let again = convex_hull(p.vertices());
        prop_assert_eq!(&again, &p);
        prop_assert_eq!(p.lattice_points().len() as i64, p.count_lattice_points());
    }

    #[test]
    fn interior_relation(p in full_hull(20, 9)) {
        prop_assert_eq!(width_from_interior(&p).unwrap(), lattice_width(&p).width);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn unimodular_invariance(p in hull(8, 8), m in unimodular()) {
        let q = m.apply(&p);
        prop_assert_eq!(normal_form(&q), normal_form(&p));
        prop_assert!(equivalent(&p, &q));
        prop_assert_eq!(q.count_lattice_points(), p.count_lattice_points());
        prop_assert_eq!(q.area_twice(), p.area_twice());
        prop_assert_eq!(lattice_width(&q).width, lattice_width(&p).width);
        prop_assert_eq!(
            is_standard_simplex_multiple(&q).is_some(),
            is_standard_simplex_multiple(&p).is_some()
        );
        prop_assert_eq!(m.inverse().apply(&q), p);
    }

    #[test]
    fn normal_form_map_is_witness(p in hull(12, 8)) {
        let (nf, map) = normal_form_with_map(&p);
        prop_assert_eq!(map.apply(&p), nf.clone());
        prop_assert_eq!(normal_form(&nf), nf);
    }

    #[test]
    fn width_certificate_is_sound(p in full_hull(12, 8)) {
        let cert = lattice_width(&p);
        let u = cert.direction.clone().unwrap();
        prop_assert_eq!(width_along(&p, &u).unwrap(), cert.width);
        // independent of the search bound used by lattice_width
        prop_assert_eq!(brute_width(&p, 48), cert.width);
    }

    #[test]
    fn bigint_agrees_with_i64(p in hull(20, 8)) {
        let big: Polygon = p.cast();
        prop_assert_eq!(big.count_lattice_points(), BigInt::from(p.count_lattice_points()));
        prop_assert_eq!(lattice_width(&big).width, BigInt::from(lattice_width(&p).width));
        prop_assert_eq!(normal_form(&big).cast::<i64>(), normal_form(&p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn relaxation_matches_search(p in full_hull(2, 5)) {
        let r = relaxation(&p).unwrap();
        if let Some(big) = &r.relaxed {
            prop_assert_eq!(big.interior_polygon(), p.clone());
        }
        if p.count_lattice_points() <= 6 {
            let found = search_interior_witness(&p, 4, 24).is_some();
            prop_assert_eq!(found, r.integral);
        }
    }
}

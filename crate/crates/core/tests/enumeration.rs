use std::collections::BTreeSet;

use polybn_core::enumeration::{
    naive_by_interior_points, naive_by_lattice_points, realizable_as_interior, Enumerator,
    MAX_INTERIOR,
};
use polybn_core::error::EnumerationError;
use polybn_core::lattice::{is_standard_simplex_multiple, lattice_width, normal_form};
use polybn_core::toric_bn::{gonality_bound_theorem, plane_curve_profile};
use polybn_core::SmallPolygon;

fn reps(classes: Vec<polybn_core::enumeration::PolygonClass<i64>>) -> BTreeSet<SmallPolygon> {
    classes.into_iter().map(|c| c.representative).collect()
}

#[test]
fn lattice_point_counts_match_brute_force() {
    let e = Enumerator::new();
    for n in 1..=5 {
        let fast = reps(e.by_lattice_points(n).unwrap());
        assert_eq!(fast, naive_by_lattice_points(n as usize, 5), "n = {n}");
    }
    // a larger box finds nothing new
    assert_eq!(
        reps(e.by_lattice_points(5).unwrap()),
        naive_by_lattice_points(5, 6)
    );
}

#[test]
fn known_class_counts() {
    let e = Enumerator::new();
    let points: Vec<usize> = (1..=9)
        .map(|n| e.by_lattice_points::<i64>(n).unwrap().len())
        .collect();
    assert_eq!(points, vec![1, 1, 2, 4, 7, 14, 22, 42, 68]);
    let interior: Vec<usize> = (1..=4)
        .map(|g| e.by_interior_points::<i64>(g).unwrap().len())
        .collect();
    assert_eq!(interior, vec![16, 45, 120, 211]);
}

#[test]
fn genus_one_matches_brute_force() {
    let fast = reps(Enumerator::new().by_interior_points(1).unwrap());
    assert_eq!(fast, naive_by_interior_points(1, 5));
}

#[test]
fn genus_two_matches_brute_force() {
    let fast = reps(Enumerator::new().by_interior_points(2).unwrap());
    assert_eq!(fast, naive_by_interior_points(2, 6));
}

#[test]
fn classes_are_normal_forms_with_the_right_counts() {
    let e = Enumerator::new();
    for g in 1..=6 {
        for c in e.by_interior_points::<i64>(g).unwrap() {
            let p = &c.representative;
            assert_eq!(normal_form(p), *p);
            assert_eq!(p.count_interior_points(), g);
            assert_eq!(c.n_points, p.count_lattice_points());
            assert_eq!(c.lw, lattice_width(p).width);
        }
    }
}

#[test]
fn interior_classes_are_exactly_the_realizable_ones() {
    let e = Enumerator::new();
    for g in 1..=6 {
        let from_newton = reps(e.interior_classes(g).unwrap());
        let realizable: BTreeSet<_> = e
            .by_lattice_points::<i64>(g)
            .unwrap()
            .into_iter()
            .map(|c| c.representative)
            .filter(realizable_as_interior)
            .collect();
        assert_eq!(from_newton, realizable, "g = {g}");
    }
}

#[test]
fn output_is_independent_of_thread_count() {
    let one = Enumerator::new().threads(1);
    let many = Enumerator::new().threads(6);
    assert_eq!(
        one.by_lattice_points::<i64>(9).unwrap(),
        many.by_lattice_points(9).unwrap()
    );
    assert_eq!(
        one.by_interior_points::<i64>(7).unwrap(),
        many.by_interior_points(7).unwrap()
    );
}

#[test]
fn gonality_cap_never_exceeds_the_theorem_bound() {
    // lattice width for most polygons; d - 1 for dΣ, whose width d can exceed
    // the bound (4Σ: width 4, genus 3, bound 3)
    let e = Enumerator::new();
    for g in 3..=9 {
        let bound = gonality_bound_theorem(g).unwrap();
        for c in e.by_interior_points::<i64>(g).unwrap() {
            let cap = match is_standard_simplex_multiple(&c.representative) {
                Some(d) => plane_curve_profile(d).unwrap().1,
                None => c.lw,
            };
            assert!(cap <= bound, "g = {g}: {} has cap {cap}", c.representative);
        }
    }
}

#[test]
fn range_and_resource_errors() {
    let e = Enumerator::new();
    assert!(matches!(
        e.by_interior_points::<i64>(MAX_INTERIOR + 1),
        Err(EnumerationError::UnsupportedRange { .. })
    ));
    assert!(matches!(
        e.by_interior_points::<i64>(0),
        Err(EnumerationError::UnsupportedRange { .. })
    ));
    assert!(matches!(
        Enumerator::new().max_states(3).by_interior_points::<i64>(4),
        Err(EnumerationError::ResourceLimit(_))
    ));
}

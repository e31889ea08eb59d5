//! Identities connecting independently computed number families, plus the
//! export surface of the family registry.

use bhlab_core::families::{
    bernoulli_table, build_table, default_normalization, gbh_table, normalization_tags,
    ExportedTable,
};
use bhlab_core::{CurveSpec, Family, Rat};

/// t/sin t carries scaled Bernoulli numbers, so the circular-curve family
/// must reproduce them: value at 2n equals (-1)^(n-1) * 2 * (2^(2n-1) - 1)
/// * B_2n.  The two sides come from unrelated computations (series
/// reversion of arcsin versus the defining recurrence).
#[test]
fn circular_curve_family_carries_scaled_bernoulli_numbers() {
    let gbh = gbh_table(&CurveSpec::circular(), 20);
    let bern = bernoulli_table(20);
    for n in 1u64..=10 {
        let m = 2 * n;
        let factor = Rat::from(2i64) * (Rat::from(2i64).pow((m - 1) as i32) - Rat::one());
        let sign = if n % 2 == 1 { Rat::one() } else { -Rat::one() };
        assert_eq!(
            gbh[m as usize],
            sign * factor * bern[m as usize].clone(),
            "index {}",
            m
        );
    }
}

#[test]
fn registry_tables_have_their_landmark_values() {
    let bern = build_table(Family::Bernoulli, None, None, 12).unwrap().to_exported();
    assert_eq!(bern.values[&12], "-691/2730");

    let hurwitz = build_table(Family::Hurwitz, None, None, 8).unwrap().to_exported();
    assert_eq!(hurwitz.values[&4], "1/10");
    assert_eq!(hurwitz.values[&8], "3/10");

    let circular = build_table(Family::Gbh, Some(CurveSpec::circular()), None, 4)
        .unwrap()
        .to_exported();
    assert_eq!(circular.values[&2], "1/3");

    let lemniscatic = build_table(Family::Gbh, Some(CurveSpec::lemniscatic()), None, 4)
        .unwrap()
        .to_exported();
    assert_eq!(lemniscatic.values[&4], "12/5");

    let universal = build_table(Family::Universal, None, None, 3).unwrap().to_exported();
    assert_eq!(universal.values[&3], "3/2*c1^3 - 3*c1*c2 + 3/2*c3");
}

#[test]
fn every_registry_entry_builds_and_round_trips() {
    for family in Family::all() {
        let curve = match family {
            Family::Gbh => Some(CurveSpec::circular()),
            _ => None,
        };
        for tag in normalization_tags(family) {
            let table = build_table(family, curve, Some(tag), 8).unwrap();
            let exported = table.to_exported();
            assert_eq!(exported.normalization, *tag);
            let json = exported.to_json();
            let back = ExportedTable::from_json(&json).unwrap();
            assert_eq!(back.to_json(), json);
        }
        assert_eq!(
            normalization_tags(family)[0],
            default_normalization(family)
        );
    }
}

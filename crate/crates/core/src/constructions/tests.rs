use super::*;
use crate::groebner::min_gens_leading_ideal;
use crate::ring::parse_polynomial;

fn p(s: &str) -> Polynomial {
    parse_polynomial(s).unwrap()
}

fn generic(n: u8, i: u8, j: u8) -> InstanceSpec {
    InstanceSpec::new(n, Kind::Generic, (i, j)).unwrap()
}

fn symmetric(n: u8, i: u8, j: u8) -> InstanceSpec {
    InstanceSpec::new(n, Kind::Symmetric, (i, j)).unwrap()
}

#[test]
fn spec_validation() {
    assert!(matches!(
        InstanceSpec::new(1, Kind::Generic, (1, 2)),
        Err(SpecError::SizeTooSmall(1))
    ));
    assert!(matches!(
        InstanceSpec::new(3, Kind::Generic, (2, 2)),
        Err(SpecError::BadPivot(2, 2))
    ));
    assert!(matches!(
        InstanceSpec::new(3, Kind::Generic, (1, 4)),
        Err(SpecError::BadPivot(1, 4))
    ));
}

#[test]
fn universe_sizes() {
    assert_eq!(generic(3, 1, 2).universe().len(), 9 + 3);
    assert_eq!(symmetric(3, 1, 2).universe().len(), 6 + 3);
    assert_eq!(generic(4, 1, 2).universe().len(), 16 + 4);
}

#[test]
fn g_entries_by_definition() {
    let inst = build_instance(&generic(2, 1, 2));
    assert_eq!(inst.g_at(1), &p("x[1,1]y[1] + x[1,2]y[2]"));
    assert_eq!(inst.g_at(2), &p("x[2,1]y[1] + x[2,2]y[2]"));
}

#[test]
fn minor_count_and_values() {
    let inst = build_instance(&generic(3, 1, 2));
    assert_eq!(inst.minors.len(), 3);
    assert_eq!(inst.minors[0], p("x[1,1]x[2,2] - x[1,2]x[2,1]"));
}

#[test]
fn symmetric_rows_canonicalize() {
    // row 2 of the symmetric Xt_12 is (x[1,2], x[2,2], x[2,3])
    let inst = build_instance(&symmetric(3, 1, 2));
    assert_eq!(inst.row1, vec![Var::X(1, 1), Var::X(1, 2), Var::X(1, 3)]);
    assert_eq!(inst.row2, vec![Var::X(1, 2), Var::X(2, 2), Var::X(2, 3)]);
}

#[test]
fn g_sequence_pivot_first() {
    let inst = build_instance(&generic(4, 2, 3));
    assert_eq!(inst.g_sequence(), vec![2, 3, 1, 4]);
}

#[test]
fn supp_examples() {
    let m = Monomial::from_pairs([(Var::x(1, 1), 1), (Var::y(2), 1)]);
    let s = supp([&m]);
    assert_eq!(
        s.into_iter().collect::<Vec<_>>(),
        vec![(0, 0, 2), (1, 1, 0)]
    );
    assert!(supp([]).is_empty());
}

#[test]
fn minors_vs_g1_transversal_by_support_at_n3() {
    let sp = generic(3, 1, 2);
    let inst = build_instance(&sp);
    let ord = orders::order_a(&sp);
    let verdict = transversal_by_support(
        &inst.minor_ideal(),
        &crate::groebner::Ideal::new(vec![inst.g_at(1).clone()]),
        &ord,
    )
    .unwrap();
    assert_eq!(verdict, TransversalityVerdict::Transversal);
}

#[test]
fn shared_variable_is_inconclusive() {
    let sp = generic(2, 1, 2);
    let ord = orders::order_a(&sp);
    let i = crate::groebner::Ideal::new(vec![p("x[1,1]")]);
    let j = crate::groebner::Ideal::new(vec![p("x[1,1]y[1]")]);
    assert_eq!(
        transversal_by_support(&i, &j, &ord).unwrap(),
        TransversalityVerdict::CriterionInconclusive
    );
}

#[test]
fn later_stage_transversal_by_support_at_n4() {
    // minors plus g_1, g_2 against g_3 under the diagonal-first order
    let sp = generic(4, 1, 2);
    let inst = build_instance(&sp);
    let ord = orders::order_c(&sp);
    let mut gens = inst.minors.clone();
    gens.push(inst.g_at(1).clone());
    gens.push(inst.g_at(2).clone());
    let i = crate::groebner::Ideal::new(gens);
    let j = crate::groebner::Ideal::new(vec![inst.g_at(3).clone()]);
    assert_eq!(
        transversal_by_support(&i, &j, &ord).unwrap(),
        TransversalityVerdict::Transversal
    );
}

#[test]
fn coprime_lt_criterion_examples() {
    let sp = generic(2, 1, 2);
    let ord = orders::order_a(&sp);
    assert!(regular_sequence_by_coprime_lt(&[p("x[1,1]"), p("y[1]")], &ord).unwrap());
    assert!(!regular_sequence_by_coprime_lt(&[p("x[1,1]"), p("x[1,1]y[1]")], &ord).unwrap());
}

#[test]
fn height_sequence_coprime_under_height_order() {
    // the staircase minors f_k certify ht(I2) = n-1, generic and symmetric
    for n in 3..=6u8 {
        for (kind, make) in [
            (Kind::Generic, generic as fn(u8, u8, u8) -> InstanceSpec),
            (Kind::Symmetric, symmetric as fn(u8, u8, u8) -> InstanceSpec),
        ] {
            let sp = make(n, 1, 2);
            let inst = build_instance(&sp);
            let seq = height_sequence(&inst);
            assert_eq!(seq.len(), n as usize - 1);
            let ord = orders::height_order(&sp);
            assert!(
                regular_sequence_by_coprime_lt(&seq, &ord).unwrap(),
                "n={} kind={:?}",
                n,
                kind
            );
        }
    }
}

#[test]
fn height_order_gives_staircase_leading_terms() {
    // Lt(f_k) = x[i,k] * x[j,k+1] under the height order
    let sp = generic(4, 1, 2);
    let inst = build_instance(&sp);
    let ord = orders::height_order(&sp);
    for (k, f) in height_sequence(&inst).iter().enumerate() {
        let lm = f.leading_monomial(&ord).unwrap();
        let expected =
            Monomial::from_pairs([(Var::x(1, k as u8 + 1), 1), (Var::x(2, k as u8 + 2), 1)]);
        assert_eq!(lm, expected, "k = {}", k + 1);
    }
}

#[test]
fn support_of_minor_leading_ideal_avoids_last_column() {
    let sp = generic(4, 1, 2);
    let inst = build_instance(&sp);
    let ord = orders::order_a(&sp);
    let gens = min_gens_leading_ideal(&inst.minor_ideal(), &ord).unwrap();
    let s = supp(gens.iter());
    assert!(!s.contains(&(1, 4, 0)));
    assert!(!s.contains(&(0, 0, 4)));
}

#[test]
fn symmetric_transversality_order_works_at_n3() {
    // pivot (2,3) = (n-1, n) exercises the special-case order shape
    let sp = symmetric(3, 2, 3);
    let inst = build_instance(&sp);
    let ord = orders::order_trans_sym(&sp);
    let verdict = transversal_by_support(
        &inst.minor_ideal(),
        &crate::groebner::Ideal::new(vec![inst.g_at(2).clone()]),
        &ord,
    )
    .unwrap();
    assert_eq!(verdict, TransversalityVerdict::Transversal);
}

#[test]
fn order_presets_cover_the_universe() {
    for kind in [Kind::Generic, Kind::Symmetric] {
        for (i, j) in [(1u8, 2u8), (2, 3), (3, 4)] {
            let sp = InstanceSpec::new(4, kind, (i, j)).unwrap();
            // each preset is meant for one kind of instance
            let names: &[&str] = match kind {
                Kind::Generic => &["order_a", "order_b", "order_c", "default"],
                Kind::Symmetric => &[
                    "order_a_sym",
                    "order_b_sym",
                    "order_c_sym",
                    "order_trans_sym",
                    "default",
                ],
            };
            for &name in names {
                let ord = orders::by_name(name, &sp).unwrap();
                for v in sp.universe() {
                    assert!(ord.contains(v), "{} missing {} ({:?})", name, v, kind);
                }
                assert_eq!(ord.priority().len(), sp.universe().len(), "{}", name);
            }
            assert!(orders::by_name("no_such_order", &sp).is_none());
        }
    }
}

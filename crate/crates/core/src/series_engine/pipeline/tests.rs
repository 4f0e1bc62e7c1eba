use super::*;
use crate::core_scheme::{consistent_namings, decorate, enumerate_r_cores, mirror, permutations, rootable_colors};
use crate::motzkin::MotzkinWalk;
use crate::oracle_enum::{count_bivariate, count_by_edges};

fn genus_one() -> Vec<UnlabeledScheme> {
    enumerate_schemes(1).unwrap().rooted().cloned().collect()
}

/// Three genus-2 schemes with four vertices, in census order.
fn genus_two_sample() -> Vec<UnlabeledScheme> {
    enumerate_schemes(2).unwrap().rooted().filter(|s| s.n_vertices() == 4).take(3).cloned().collect()
}

fn d_series(order: u32) -> [TruncatedSeries; 2] {
    [series_d_bullet(order).unwrap(), series_d_circ(order).unwrap()]
}

#[test]
fn rational_and_series_forms_of_r_l_agree() {
    let order = 7;
    let subs = d_series(order);
    for s in genus_one() {
        for l in labeled_schemes_in_box(&s, 2) {
            let f = TruncatedSeries::eval_rational(&r_labeled_rational(&l), &subs).unwrap();
            assert_eq!(f, r_labeled_closed(&l, order).unwrap());
        }
    }
}

#[test]
fn closed_product_matches_decorated_enumeration() {
    let order = 6;
    let mut census = BranchCensus::new(order, order);
    let mut schemes: Vec<UnlabeledScheme> = genus_one();
    schemes.extend(genus_two_sample());
    for s in schemes {
        for l in labeled_schemes_in_box(&s, 3).into_iter().step_by(7) {
            assert_eq!(r_labeled_closed(&l, order).unwrap(), r_labeled_direct(&l, &mut census, order).unwrap());
        }
    }
}

#[test]
fn direct_census_needs_long_enough_walks() {
    let l = labeled_schemes_in_box(&genus_one()[0], 0).remove(0);
    let mut census = BranchCensus::new(2, 8);
    assert!(matches!(r_labeled_direct(&l, &mut census, 8), Err(Error::ResourceLimit(_))));
}

#[test]
fn stem_weights_follow_corner_parity() {
    for s in genus_one() {
        for l in labeled_schemes_in_box(&s, 2) {
            let (a, b) = stem_weight(&l);
            assert_eq!(a + b, 2);
            // the root bud sits at label 0
            assert!(a >= 1);
        }
    }
}

/// Leaf colors of the decorated core equal the monomial of its walks.
#[test]
fn decorations_give_cores_with_the_expected_leaves() {
    let all_walks = |i: i64, j: i64| -> Vec<MotzkinWalk> { (0..=2).flat_map(|n| typed_walks(i, j, n)).collect() };
    for s in genus_one() {
        for l in labeled_schemes_in_box(&s, 1) {
            let per_edge: Vec<Vec<MotzkinWalk>> =
                s.edges().iter().map(|e| all_walks(l.lambda0(e), l.lambda1(e))).collect();
            let (sa, sb) = stem_weight(&l);
            for w0 in &per_edge[0] {
                for w1 in &per_edge[1] {
                    for w2 in per_edge[2].iter().take(5) {
                        let ws = vec![w0.clone(), w1.clone(), w2.clone()];
                        let m = decorate(&l, &ws).unwrap();
                        assert!(m.is_well_labeled());
                        let mut black = sa as usize;
                        let mut total = (sa + sb) as usize;
                        for (e, w) in s.edges().iter().zip(&ws) {
                            let labs = decode_branch(w, l.lambda0(e), l.lambda1(e)).unwrap().leaf_labels(l.lambda0(e));
                            black += labs.iter().filter(|x| x.rem_euclid(2) == 0).count();
                            total += labs.len();
                        }
                        assert_eq!(rootable_colors(&m).unwrap(), (black, total - black));
                    }
                }
            }
        }
    }
}

#[test]
fn labeled_scheme_sum_matches_core_census() {
    let order = 5;
    let mut sum = TruncatedSeries::zero(2, order);
    for s in genus_one() {
        for l in labeled_schemes_in_box(&s, height_box(&s, order)) {
            sum = &sum + &r_labeled_closed(&l, order).unwrap();
        }
    }
    let mut census = TruncatedSeries::zero(2, order);
    for e in 3..=order as usize + 1 {
        for c in enumerate_r_cores(1, e).unwrap() {
            let (b, w) = rootable_colors(&c.map).unwrap();
            census.add_term(vec![b as u32, w as u32], one());
        }
    }
    assert_eq!(sum, census);
}

#[test]
fn univariate_closed_form_matches_height_sum() {
    for s in genus_one() {
        for nu in consistent_namings(&s) {
            for pi in permutations(s.n_vertices()) {
                let f = r_uni_closed(&s, &nu, &pi).unwrap();
                let x = TruncatedSeries::var(1, 10, 0);
                assert_eq!(TruncatedSeries::eval_rational(&f, &[x]).unwrap(), r_uni_direct(&s, &nu, &pi, 10).unwrap());
            }
        }
    }
    let s = &genus_two_sample()[0];
    let nu = consistent_naming(s).unwrap();
    for pi in permutations(4).into_iter().step_by(5) {
        let f = r_uni_closed(s, &nu, &pi).unwrap();
        let x = TruncatedSeries::var(1, 6, 0);
        assert_eq!(TruncatedSeries::eval_rational(&f, &[x]).unwrap(), r_uni_direct(s, &nu, &pi, 6).unwrap());
    }
}

#[test]
fn univariate_mirror_identity() {
    let mut schemes = genus_one();
    schemes.extend(genus_two_sample());
    for s in schemes {
        for nu in consistent_namings(&s).into_iter().take(3) {
            for pi in permutations(s.n_vertices()) {
                let a = r_uni(&s, &nu, &mirror(&pi)).unwrap().par_bar();
                assert_eq!(a, r_uni(&s, &nu, &pi).unwrap());
            }
        }
    }
}

#[test]
fn inconsistent_naming_is_rejected() {
    let s = genus_two_sample().remove(0);
    let bad = permutations(4).into_iter().find(|nu| !is_consistent(&s, nu)).unwrap();
    assert_eq!(r_uni_closed(&s, &bad, &[0, 1, 2, 3]).unwrap_err(), Error::InconsistentNaming);
}

#[test]
fn recursion_base_cases() {
    let s = &genus_two_sample()[0];
    let nu = consistent_naming(s).unwrap();
    let one = RationalFunction::constant(2, 1);
    for bb in BinaryBijection::all(4).into_iter().step_by(11) {
        for c in [Color::Black, Color::White] {
            assert_eq!(s_recursive(s, &nu, &bb, 4, true, c).unwrap(), one);
            assert_eq!(s_recursive(s, &nu, &bb, 1, false, c).unwrap(), one);
        }
    }
}

fn check_s_against_direct(s: &UnlabeledScheme, order: u32) {
    let nu = consistent_naming(s).unwrap();
    let direct = s_direct_all(s, &nu, order).unwrap();
    let subs = [TruncatedSeries::var(2, order, 0), TruncatedSeries::var(2, order, 1)];
    for bb in BinaryBijection::all(s.n_vertices()) {
        for c in [Color::Black, Color::White] {
            let f = s_recursive(s, &nu, &bb, 1, true, c).unwrap();
            let got = TruncatedSeries::eval_rational(&f, &subs).unwrap();
            let want = direct.get(&(bb.clone(), c)).cloned().unwrap_or_else(|| TruncatedSeries::zero(2, order));
            assert_eq!(got, want, "{bb:?} {c:?}");
            // the descending recursion counts the same labeled schemes from the top
            let top = bb.zeta.iter().fold(c, |col, &z| col.flip_if(z));
            assert_eq!(s_recursive(s, &nu, &bb, s.n_vertices(), false, top).unwrap(), f);
        }
    }
}

#[test]
fn s_recursion_matches_bounded_height_sum() {
    for s in genus_one() {
        check_s_against_direct(&s, 10);
    }
    check_s_against_direct(&genus_two_sample()[0], 5);
}

#[test]
fn s_specializes_to_the_univariate_form() {
    let d = RationalFunction::var(1, 0);
    let mut schemes = genus_one();
    schemes.extend(genus_two_sample());
    for s in schemes {
        let nu = consistent_naming(&s).unwrap();
        let e = s.edges().len() as i64;
        for pi in permutations(s.n_vertices()) {
            let mut sum = RationalFunction::constant(1, 0);
            for bb in BinaryBijection::all(s.n_vertices()).into_iter().filter(|bb| bb.pi == pi) {
                let f = s_recursive(&s, &nu, &bb, 1, true, base_color(&s, &bb)).unwrap();
                sum = &sum + &f.compose(&[d.clone(), d.clone()]);
            }
            assert_eq!(&sum * &uni_b().powi(e), r_uni_closed(&s, &nu, &pi).unwrap());
        }
    }
}

#[test]
fn binary_pieces_sum_to_the_labeled_schemes() {
    let order = 6;
    let subs = d_series(order);
    for s in genus_one() {
        let nu = consistent_naming(&s).unwrap();
        let mut by_bb: BTreeMap<BinaryBijection, TruncatedSeries> = BTreeMap::new();
        for l in labeled_schemes_in_box(&s, height_box(&s, order)) {
            let e = by_bb.entry(l.binary_bijection(&nu)).or_insert_with(|| TruncatedSeries::zero(2, order));
            *e = &*e + &r_labeled_closed(&l, order).unwrap();
        }
        for bb in BinaryBijection::all(2) {
            let got = TruncatedSeries::eval_rational(&r_binary(&s, &nu, &bb).unwrap(), &subs).unwrap();
            assert_eq!(got, by_bb[&bb], "{bb:?}");
        }
    }
}

#[test]
fn circ_of_scheme_series_is_par_symmetric() {
    let mut schemes = genus_one();
    schemes.extend(genus_two_sample());
    for s in schemes {
        let nu = consistent_naming(&s).unwrap();
        for bb in BinaryBijection::all(s.n_vertices()) {
            let lhs = r_binary_factored(&s, &nu, &bb).unwrap().circ().par_bar();
            let rhs = r_binary_factored(&s, &nu, &bb.mirror()).unwrap().circ();
            assert!(lhs == rhs, "{bb:?}");
        }
        assert!(r_scheme_factored(&s).unwrap().circ().is_par_symmetric());
        // the sign (-1)^{|E|+|V|-1} is +1: Euler gives |E| - |V| + 1 = 2g
        assert_eq!(s.edges().len() + 1 - s.n_vertices(), 2 * s.genus());
        assert_eq!((s.edges().len() + s.n_vertices() - 1) % 2, 0);
    }
}

#[test]
fn genus_one_assembly_matches_census() {
    let a = assemble_o_and_m(1, 5).unwrap();
    let table = count_bivariate(1, 5).unwrap();
    let mut want = TruncatedSeries::zero(2, 5);
    for (k, &c) in &table.counts {
        want.add_term(vec![k[0] as u32, k[1] as u32], BigRational::from_integer(c.into()));
    }
    assert_eq!(a.series, want);
    let by_edges = count_by_edges(1, 5).unwrap();
    let diag = a.series.diagonal();
    for e in 1..=5u32 {
        assert_eq!(diag.coeff(&[e]), BigRational::from_integer(by_edges.get(&[e as usize]).into()));
    }
    assert_eq!(a.per_class.len(), 2);
    let mut parts = TruncatedSeries::zero(2, 5);
    for c in &a.per_class {
        parts = &parts + &c.o_series;
    }
    assert_eq!(parts, a.series);
}

#[test]
fn genus_one_rational_form_has_the_expected_shape() {
    let a = assemble_o_and_m(1, 3).unwrap();
    let rep = formula_shape(&a.rational, 1);
    assert!(rep.polynomial && rep.symmetric);
    // frozen from the census-checked assembly
    assert_eq!(rep.p_g, Some(Poly::one(2)));
    let bad = &a.rational * &RationalFunction::var(2, 0);
    assert!(!formula_shape(&bad, 1).symmetric);
}

#[test]
fn assembly_is_limited_to_genus_one() {
    assert!(matches!(assemble_o_and_m(2, 3), Err(Error::ResourceLimit(_))));
}

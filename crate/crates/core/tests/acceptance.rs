//! End-to-end acceptance run. Prints one line per criterion and fails if any
//! criterion does.

use mapforge::core_scheme::{
    consistent_naming, consistent_namings, enumerate_schemes, mirror, permutations, BinaryBijection, UnlabeledScheme,
};
use mapforge::map_core::{radial, radial_inverse};
use mapforge::motzkin::{series_b, series_d_bullet, series_d_circ};
use mapforge::oracle_enum::{
    count_bivariate, count_by_edges, enumerate_4valent_bicolorable, enumerate_4valent_bicolorable_maps,
    enumerate_good_map_list, enumerate_good_maps, enumerate_rooted_maps, scan_by_sigma, verify_propp, CountTable,
};
use mapforge::series_engine::pipeline::{
    assemble_o_and_m, formula_shape, labeled_schemes_in_box, r_binary_factored, r_labeled_closed, r_labeled_direct,
    r_scheme_factored, r_uni, BranchCensus,
};
use mapforge::series_engine::{rational_t_and_b, Poly, TruncatedSeries};
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

fn genus_one() -> Vec<UnlabeledScheme> {
    enumerate_schemes(1).unwrap().rooted().cloned().collect()
}

/// Three four-vertex genus-2 schemes, in census order.
fn genus_two_sample() -> Vec<UnlabeledScheme> {
    enumerate_schemes(2).unwrap().rooted().filter(|s| s.n_vertices() == 4).take(3).cloned().collect()
}

fn oracle_self_consistency() {
    for n in 1..=3 {
        let scan = scan_by_sigma(n).unwrap();
        for g in 0..=1 {
            let mut direct = BTreeMap::new();
            for m in enumerate_rooted_maps(g, n).unwrap() {
                *direct.entry((g, m.num_vertices(), m.num_faces())).or_insert(0u64) += 1;
            }
            let scanned: BTreeMap<_, _> = scan.iter().filter(|(k, _)| k.0 == g).map(|(k, v)| (*k, *v)).collect();
            assert_eq!(direct, scanned, "n = {n}, g = {g}");
        }
    }
    // OEIS A000168 and A006300
    let planar = count_by_edges(0, 5).unwrap();
    let toric = count_by_edges(1, 5).unwrap();
    for (e, (p, t)) in [(2, 0), (9, 1), (54, 20), (378, 307), (2916, 4280)].into_iter().enumerate() {
        assert_eq!(planar.get(&[e + 1]), p);
        assert_eq!(toric.get(&[e + 1]), t);
    }
}

fn radial_census() {
    for g in 0..=1 {
        for n in 1..=4 {
            let mut pushed = CountTable::new(g, &["Fb", "Fw"]);
            for m in enumerate_rooted_maps(g, n).unwrap() {
                let r = radial(&m);
                let c = r.map.face_coloring().unwrap();
                assert_eq!((c.n_black(), c.n_white()), (m.num_vertices(), m.num_faces()));
                assert!(radial_inverse(&r.map).unwrap().is_isomorphic_rooted(&m));
                pushed.add(vec![c.n_black(), c.n_white()], 1);
            }
            assert_eq!(pushed, enumerate_4valent_bicolorable(g, n).unwrap(), "g = {g}, n = {n}");
            for r in enumerate_4valent_bicolorable_maps(g, n).unwrap() {
                assert!(radial(&radial_inverse(&r).unwrap()).map.is_isomorphic_rooted(&r));
            }
        }
    }
}

fn closure_bijection() {
    for g in 0..=1 {
        for e in 2 * g..=3 {
            let goods = enumerate_good_map_list(g, e).unwrap();
            let mut images = Vec::new();
            for u in &goods {
                let c = u.closure().unwrap();
                let col = c.map.face_coloring().unwrap();
                let (lb, lw) = u.leaf_colors().unwrap();
                assert_eq!((lb + 1, lw), (col.n_black(), col.n_white()));
                let lab = u.canonical_labeling().unwrap();
                for (&leaf, &f) in &c.leaf_face {
                    assert_eq!(col.black[f], lab.stem_labels[&leaf] % 2 == 0);
                }
                images.push(c.map.canonical_form());
            }
            let n = images.len();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), n);
            let good = enumerate_good_maps(g, e).unwrap().relabeled(&["Fb", "Fw"]);
            assert_eq!(good, enumerate_4valent_bicolorable(g, e + 1 - 2 * g).unwrap());
        }
    }
}

fn propp() {
    let mut checked = 0;
    for n in 1..=4 {
        for g in 0..=2 {
            for m in enumerate_rooted_maps(g, n).unwrap() {
                if m.is_bicolorable() {
                    assert!(verify_propp(&m).unwrap(), "{m}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

fn motzkin_identities() {
    let n = 10;
    let (db, dw, b) = (series_d_bullet(n).unwrap(), series_d_circ(n).unwrap(), series_b(n).unwrap());
    let tb = TruncatedSeries::var(2, n, 0);
    let tw = TruncatedSeries::var(2, n, 1);
    let s = (&tb + &tw).scale(&BigRational::from_integer(2.into()));
    let one = TruncatedSeries::one(2, n);
    assert_eq!(&tw * &db, &tb * &dw);
    assert_eq!(b.swap(), b);
    assert_eq!(db, &(&tb + &(&s * &db)) + &(&(&tb * &dw) * &db));
    assert_eq!(dw, &(&tw + &(&s * &dw)) + &(&(&tw * &db) * &dw));
    assert_eq!(b, &(&one + &(&s * &b)) + &(&(&(&tb * &dw) + &(&tw * &db)) * &b));
    let (rtb, rtw, rb) = rational_t_and_b();
    let subs = [db, dw];
    assert_eq!(TruncatedSeries::eval_rational(&rtb, &subs).unwrap(), tb);
    assert_eq!(TruncatedSeries::eval_rational(&rtw, &subs).unwrap(), tw);
    assert_eq!(TruncatedSeries::eval_rational(&rb, &subs).unwrap(), b);
}

fn decomp_core() {
    let order = 8;
    let mut census = BranchCensus::new(order, order);
    for s in genus_one() {
        for l in labeled_schemes_in_box(&s, 8) {
            assert_eq!(r_labeled_closed(&l, order).unwrap(), r_labeled_direct(&l, &mut census, order).unwrap());
        }
    }
    for s in genus_two_sample() {
        let l = labeled_schemes_in_box(&s, 1).pop().unwrap();
        assert_eq!(r_labeled_closed(&l, order).unwrap(), r_labeled_direct(&l, &mut census, order).unwrap());
    }
}

fn univariate_mirror() {
    let mut schemes = genus_one();
    schemes.extend(genus_two_sample());
    for s in schemes {
        for nu in consistent_namings(&s) {
            for pi in permutations(s.n_vertices()) {
                assert_eq!(r_uni(&s, &nu, &mirror(&pi)).unwrap().par_bar(), r_uni(&s, &nu, &pi).unwrap());
            }
        }
    }
}

fn bivariate_mirror() {
    let mut schemes = genus_one();
    schemes.extend(genus_two_sample());
    for s in schemes {
        let nu = consistent_naming(&s).unwrap();
        for bb in BinaryBijection::all(s.n_vertices()) {
            let lhs = r_binary_factored(&s, &nu, &bb).unwrap().circ().par_bar();
            assert!(lhs == r_binary_factored(&s, &nu, &bb.mirror()).unwrap().circ(), "{bb:?}");
        }
        assert!(r_scheme_factored(&s).unwrap().circ().is_par_symmetric());
    }
}

fn flagship() {
    let a = assemble_o_and_m(1, 5).unwrap();
    let mut want = TruncatedSeries::zero(2, 5);
    for (k, &c) in &count_bivariate(1, 5).unwrap().counts {
        want.add_term(vec![k[0] as u32, k[1] as u32], BigRational::from_integer(c.into()));
    }
    assert_eq!(a.series, want);
}

fn shape() {
    let a = assemble_o_and_m(1, 3).unwrap();
    let rep = formula_shape(&a.rational, 1);
    assert!(rep.polynomial && rep.symmetric);
    assert_eq!(rep.p_g, Some(Poly::one(2)));
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn(), u64); 10] = [
        ("oracle self-consistency", oracle_self_consistency, 120),
        ("radial construction", radial_census, 60),
        ("closure bijection", closure_bijection, 300),
        ("unique dual-geodesic orientation", propp, 120),
        ("Motzkin identities", motzkin_identities, 60),
        ("labeled scheme decomposition", decomp_core, 180),
        ("univariate mirror", univariate_mirror, 60),
        ("bivariate mirror and symmetry", bivariate_mirror, 300),
        ("genus-one series against census", flagship, 600),
        ("genus-one rational shape", shape, 60),
    ];
    let mut failed = Vec::new();
    let hook = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ok = panic::catch_unwind(AssertUnwindSafe(run)).is_ok();
        let took = start.elapsed();
        let verdict = if ok { "PASS" } else { "FAIL" };
        let note = if took > Duration::from_secs(*budget) { " (over time budget)" } else { "" };
        let mut out = std::io::stdout().lock();
        writeln!(out, "criterion {:2} {verdict} {name} [{:.1}s]{note}", i + 1, took.as_secs_f64()).unwrap();
        if !ok {
            failed.push(i + 1);
        }
    }
    panic::set_hook(hook);
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

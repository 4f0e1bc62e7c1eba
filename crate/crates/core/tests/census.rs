//! Census identities: radial construction, closure bijection, Propp's theorem.

use mapforge::map_core::{radial, radial_inverse};
use mapforge::oracle_enum::{
    count_bivariate, enumerate_4valent_bicolorable, enumerate_4valent_bicolorable_maps, enumerate_good_map_list,
    enumerate_good_maps, enumerate_rooted_maps, verify_propp, CountTable,
};

#[test]
fn radial_pushes_vf_census_to_bicolorable_census() {
    for g in 0..=1 {
        for n in 1..=4 {
            let mut pushed = CountTable::new(g, &["Fb", "Fw"]);
            for m in enumerate_rooted_maps(g, n).unwrap() {
                let r = radial(&m);
                assert_eq!(r.map.genus(), g);
                assert_eq!(r.map.num_vertices(), n);
                let c = r.map.face_coloring().unwrap();
                assert_eq!((c.n_black(), c.n_white()), (m.num_vertices(), m.num_faces()));
                assert!(radial_inverse(&r.map).unwrap().is_isomorphic_rooted(&m));
                pushed.add(vec![c.n_black(), c.n_white()], 1);
            }
            assert_eq!(pushed, enumerate_4valent_bicolorable(g, n).unwrap(), "g = {g}, n = {n}");
        }
    }
}

#[test]
fn radial_inverse_is_a_right_inverse() {
    for n in 1..=3 {
        for g in 0..=1 {
            for r in enumerate_4valent_bicolorable_maps(g, n).unwrap() {
                let m = radial_inverse(&r).unwrap();
                assert!(radial(&m).map.is_isomorphic_rooted(&r));
            }
        }
    }
}

#[test]
fn bivariate_census_matches_radial_census() {
    for g in 0..=1 {
        let vf = count_bivariate(g, 4).unwrap();
        let mut bc = CountTable::new(g, &["V", "F"]);
        for n in 1..=4 {
            bc.merge(&enumerate_4valent_bicolorable(g, n).unwrap().relabeled(&["V", "F"]));
        }
        assert_eq!(vf, bc);
    }
}

#[test]
fn closure_is_a_bijection_onto_bicolorable_maps() {
    for g in 0..=1 {
        for e in 2 * g..=3 {
            let goods = enumerate_good_map_list(g, e).unwrap();
            let v = e + 1 - 2 * g;
            let mut images = Vec::new();
            for u in &goods {
                assert!(u.is_well_rooted_by_matching());
                let c = u.closure().unwrap();
                let by_labels = u.closure_by_labels().unwrap();
                assert_eq!(c.map, by_labels.map);
                assert_eq!(c.map.genus(), g);
                assert!(c.map.degrees().iter().all(|&k| k == 4));
                let col = c.map.face_coloring().unwrap();
                let (lb, lw) = u.leaf_colors().unwrap();
                assert_eq!((lb + 1, lw), (col.n_black(), col.n_white()));
                assert_eq!(c.orientation, c.map.dual_geodesic_orientation().unwrap());
                let lab = u.canonical_labeling().unwrap();
                for (&leaf, &f) in &c.leaf_face {
                    assert_eq!(col.black[f], lab.stem_labels[&leaf] % 2 == 0);
                }
                images.push(c.map.canonical_form());
            }
            let n = images.len();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), n, "closures collide at g = {g}, e = {e}");
            let good = enumerate_good_maps(g, e).unwrap().relabeled(&["Fb", "Fw"]);
            assert_eq!(good, enumerate_4valent_bicolorable(g, v).unwrap(), "g = {g}, e = {e}");
        }
    }
}

#[test]
fn propp_holds_up_to_four_edges() {
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

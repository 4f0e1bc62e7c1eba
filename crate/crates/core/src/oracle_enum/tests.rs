use super::*;

#[test]
fn small_rooted_censuses() {
    assert_eq!(enumerate_rooted_maps(0, 1).unwrap().len(), 2);
    assert_eq!(enumerate_rooted_maps(1, 2).unwrap().len(), 1);
    assert_eq!(enumerate_rooted_maps(0, 2).unwrap().len(), 9);
    assert!(enumerate_rooted_maps(0, 0).unwrap().is_empty());
    assert!(matches!(enumerate_rooted_maps(0, 7), Err(Error::ResourceLimit(_))));
}

#[test]
fn emitted_maps_are_pairwise_distinct() {
    let maps = enumerate_rooted_maps(0, 3).unwrap();
    let mut forms: Vec<_> = maps.iter().map(|m| m.canonical_form()).collect();
    assert!(maps.iter().zip(&forms).all(|(m, c)| m == c));
    forms.sort();
    forms.dedup();
    assert_eq!(forms.len(), maps.len());
}

#[test]
fn bivariate_genus0_one_edge() {
    let t = count_bivariate(0, 1).unwrap();
    assert_eq!(t.counts.len(), 2);
    assert_eq!(t.get(&[1, 2]), 1);
    assert_eq!(t.get(&[2, 1]), 1);
}

#[test]
fn euler_on_every_entry() {
    for g in 0..=1 {
        let t = count_bivariate(g, 4).unwrap();
        let by_edges = count_by_edges(g, 4).unwrap();
        for k in t.counts.keys() {
            let e = k[0] + k[1] + 2 * g - 2;
            assert!(by_edges.get(&[e]) > 0);
        }
        assert_eq!(t.total(), by_edges.total());
    }
}

#[test]
fn sigma_scan_agrees_with_backtracking() {
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
}

#[test]
fn four_valent_one_vertex() {
    let t = enumerate_4valent_bicolorable(0, 1).unwrap();
    assert_eq!(t.get(&[1, 2]), 1);
    assert_eq!(t.get(&[2, 1]), 1);
    assert_eq!(t.total(), 2);
    assert!(enumerate_4valent_bicolorable(1, 2).unwrap().total() > 0);
}

#[test]
fn propp_on_small_maps() {
    let planar_loop = RootedMap::from_cycles(2, &[&[1, 2]], &[&[1, 2]], 1).unwrap();
    assert!(verify_propp(&planar_loop).unwrap());
    for n in 1..=3 {
        for g in 0..=1 {
            for m in enumerate_rooted_maps(g, n).unwrap() {
                if m.is_bicolorable() {
                    assert!(verify_propp(&m).unwrap(), "{m}");
                }
            }
        }
    }
}

#[test]
fn good_maps_single_vertex() {
    // one vertex, four stems: root bud then an arrangement of bud/leaf/leaf
    let maps = enumerate_good_map_list(0, 0).unwrap();
    for u in &maps {
        assert!(u.is_well_rooted_by_matching());
    }
    let t = enumerate_good_maps(0, 0).unwrap();
    assert_eq!(t.total(), 2);
    assert_eq!(t, enumerate_4valent_bicolorable(0, 1).unwrap().relabeled(&["Lb+1", "Lw"]));
}

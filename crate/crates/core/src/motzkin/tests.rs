use super::*;
use crate::series_engine::TruncatedSeries;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[test]
fn weights_of_small_walks() {
    assert_eq!(walk_weight(&MotzkinWalk::new(3, vec![])), WalkWeight::default());
    let flat = walk_weight(&MotzkinWalk::new(5, vec![Step::Flat(Flat::C)]));
    assert_eq!(flat, WalkWeight { horizontal: 1, even: 0, odd: 0 });
    let two = &TruncatedSeries::var(2, 3, 0) + &TruncatedSeries::var(2, 3, 1);
    assert_eq!(flat.to_series(3), two.scale(&q(2)));
    let ud = walk_weight(&MotzkinWalk::new(0, vec![Step::Up, Step::Down]));
    assert_eq!(ud, WalkWeight { horizontal: 0, even: 1, odd: 1 });
}

#[test]
fn bridges_do_not_depend_on_start() {
    let b0 = series_b(8).unwrap();
    assert_eq!(b0.constant_term(), q(1));
    for k in [-3, 1, 2, 5] {
        assert_eq!(series_w(k, k, 8).unwrap(), b0, "k = {k}");
    }
}

#[test]
fn first_passage_series() {
    let db = series_d_bullet(9).unwrap();
    let dw = series_d_circ(9).unwrap();
    assert_eq!(db.swap(), dw);
    for k in -2..4i64 {
        let d = series_w_floor(k, k - 1, Some(k), 9).unwrap();
        assert_eq!(d, if k.rem_euclid(2) == 0 { db.clone() } else { dw.clone() });
    }
    assert_eq!(db.coeff(&[1, 0]), q(1));
    assert_eq!(db.coeff(&[2, 0]), q(2));
}

#[test]
fn bridges_balance_parities() {
    for len in 0..=6 {
        for w in typed_walks(0, 0, len) {
            let ww = walk_weight(&w);
            assert_eq!(ww.even, ww.odd);
        }
    }
}

#[test]
fn typed_walk_counts() {
    // 4 flat types, one up, one down: walks of length 2 from 0 to 0
    assert_eq!(typed_walks(0, 0, 2).len(), 4 * 4 + 2);
    assert_eq!(typed_walks(0, 3, 2).len(), 0);
    assert_eq!(typed_walks(2, 2, 0).len(), 1);
}

#[test]
fn branch_round_trip_and_leaf_colors() {
    for len in 0..=3 {
        for i in -2..=2 {
            for j in i - len as i64..=i + len as i64 {
                for w in typed_walks(i, j, len) {
                    let b = decode_branch(&w, i, j).unwrap();
                    assert_eq!(b.n_edges(), len + 1);
                    assert_eq!(b.end_label(i), j);
                    assert_eq!(encode_branch(&b, i).unwrap(), w);
                    // the leaf of a step at height h has the parity of h, except
                    // for flat types c and d where it is the opposite one
                    for ((&s, h), leaf) in w.steps.iter().zip(w.step_heights()).zip(b.leaf_labels(i)) {
                        let flip = matches!(s, Step::Flat(Flat::C) | Step::Flat(Flat::D));
                        assert_eq!((leaf - h).rem_euclid(2) == 1, flip, "{s:?} at {h}");
                    }
                    // labels around each vertex realize the +-1 rule and never go below h - 1
                    for (lab, h) in b.corner_labels(i).iter().zip(w.step_heights()) {
                        assert!(lab.iter().all(|&x| x >= h - 1 && x <= h + 2));
                    }
                }
            }
        }
    }
    let w = MotzkinWalk::new(0, vec![Step::Up]);
    assert_eq!(decode_branch(&w, 0, 0).unwrap_err(), Error::HeightMismatch { from: 0, to: 0 });
    assert_eq!(decode_branch(&MotzkinWalk::new(4, vec![]), 4, 4).unwrap().n_edges(), 1);
}

#[test]
fn typed_sum_reproduces_weighted_series() {
    // summing leaf weights over typed walks gives the weighted walk series
    let n = 6;
    for (i, j) in [(0, 0), (0, 2), (1, -1), (-1, 0)] {
        let mut s = TruncatedSeries::zero(2, n);
        for len in 0..=n as usize {
            for w in typed_walks(i, j, len) {
                let b = decode_branch(&w, i, j).unwrap();
                let mut e = vec![0u32; 2];
                for l in b.leaf_labels(i) {
                    e[l.rem_euclid(2) as usize] += 1;
                }
                s.add_term(e, q(1));
            }
        }
        assert_eq!(s, series_w(i, j, n).unwrap(), "{i} -> {j}");
    }
}

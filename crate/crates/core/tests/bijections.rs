//! Exhaustive checks of the bijections on small lengths.

use std::collections::BTreeSet;

use altinv::bijections::*;
use altinv::generate::{generate, ClassSpec, Family};
use altinv::pattern::Pattern;
use altinv::perm::{DescentSet, Permutation};

fn class(f: Family, pats: &str, n: usize) -> Vec<Permutation> {
    generate(&ClassSpec::parse(f, pats, n).unwrap())
}

fn motzkin_count(n: usize) -> usize {
    MotzkinWord::all(n).len()
}

#[test]
fn phi_round_trips_on_4321_avoiding_involutions() {
    for n in 0..=10 {
        let dom = class(Family::I, "4321", n);
        assert_eq!(dom.len(), motzkin_count(n), "n = {n}");
        for t in &dom {
            assert_eq!(&phi_inv(&phi(t).unwrap()), t);
        }
        for m in MotzkinWord::all(n) {
            assert_eq!(phi(&phi_inv(&m)).unwrap(), m);
        }
    }
}

#[test]
fn psi_round_trips_on_3412_avoiding_involutions() {
    for n in 0..=10 {
        let dom = class(Family::I, "3412", n);
        assert_eq!(dom.len(), motzkin_count(n), "n = {n}");
        for t in &dom {
            assert_eq!(&psi_inv(&psi(t).unwrap()), t);
        }
        for m in MotzkinWord::all(n) {
            assert_eq!(psi(&psi_inv(&m)).unwrap(), m);
        }
    }
}

#[test]
fn hat_maps_are_bijections_onto_motzkin_words() {
    for half in 0..=6 {
        let all: BTreeSet<_> = MotzkinWord::all(half).into_iter().collect();
        for (pat, fwd, back) in [
            ("4321", hat_phi as fn(&Permutation) -> _, hat_phi_inv as fn(&MotzkinWord) -> _),
            ("3412", hat_psi, hat_psi_inv),
        ] {
            let dom = class(Family::RAI, pat, 2 * half);
            let mut image = BTreeSet::new();
            for t in &dom {
                let word = if pat == "4321" { phi(t) } else { psi(t) }.unwrap();
                assert!(DiodWord::from_word(&word).is_ok(), "{t} -> {word}");
                let m = fwd(t).unwrap();
                assert_eq!(&back(&m), t);
                image.insert(m);
            }
            assert_eq!(image.len(), dom.len());
            assert_eq!(image, all, "pattern {pat}, 2n = {}", 2 * half);
        }
    }
}

#[test]
fn delta_round_trips_on_all_diod_words() {
    for len in (0..=12).step_by(2) {
        for m in MotzkinWord::all(len) {
            if let Ok(d) = DiodWord::from_word(&m) {
                assert_eq!(delta_inv(&delta(&d)), d);
                assert_eq!(delta(&d).len(), len / 2);
            }
        }
        for s in MotzkinWord::all(len / 2) {
            assert_eq!(delta(&delta_inv(&s)), s);
        }
    }
}

#[test]
fn west_f_on_involution_domains() {
    for (k, avoid) in [(3, "123"), (4, "1234")] {
        let target: Pattern = if k == 3 { "132" } else { "1243" }.parse().unwrap();
        for n in 0..=9 {
            let dom = class(Family::I, avoid, n);
            let mut image = BTreeSet::new();
            for p in &dom {
                let q = west_f(p, k).unwrap();
                assert!(q.is_involution(), "f({p}) = {q}");
                assert!(!target.occurs_in(q.as_slice()));
                let ranks = rank_labels(p);
                for (j, &r) in ranks.iter().enumerate() {
                    if r < k - 1 {
                        assert_eq!(p.as_slice()[j], q.as_slice()[j]);
                    }
                }
                assert_eq!(&west_f_inv(&q, k).unwrap(), p);
                image.insert(q);
            }
            assert_eq!(image.len(), dom.len());
            let codomain = class(Family::I, &target.to_string(), n);
            assert_eq!(image.len(), codomain.len(), "k = {k}, n = {n}");
        }
    }
}

#[test]
fn west_f_inverse_on_all_permutations() {
    for k in [3, 4] {
        let dom_pat = if k == 3 { "123" } else { "1234" };
        let cod_pat = if k == 3 { "132" } else { "1243" };
        for n in 0..=7 {
            for q in class(Family::S, cod_pat, n) {
                let p = west_f_inv(&q, k).unwrap();
                assert!(!dom_pat.parse::<Pattern>().unwrap().occurs_in(p.as_slice()));
                assert_eq!(west_f(&p, k).unwrap(), q);
            }
        }
    }
}

#[test]
fn west_f_alternating_even_and_odd() {
    for n in (2..=12).step_by(2) {
        let dom = class(Family::AI, "1234", n);
        let image: BTreeSet<_> = dom.iter().map(|p| west_f(p, 4).unwrap()).collect();
        let target: BTreeSet<_> = class(Family::AI, "1243", n).into_iter().collect();
        assert_eq!(image, target, "2n = {n}");
    }
    for n in (1..=11).step_by(2) {
        let dom: Vec<_> = class(Family::AI, "1234", n)
            .into_iter()
            .filter(|p| n < 2 || p.at(2) as usize == n)
            .collect();
        let image: BTreeSet<_> = dom.iter().map(|p| west_f(p, 4).unwrap()).collect();
        let target: BTreeSet<_> = class(Family::AI, "1243", n).into_iter().collect();
        assert_eq!(image.len(), dom.len());
        assert_eq!(image, target, "2n+1 = {n}");
    }
}

#[test]
fn rsk_shape_detects_monotone_patterns() {
    let inc: Pattern = "1234".parse().unwrap();
    let dec: Pattern = "4321".parse().unwrap();
    for n in 0..=8 {
        for t in class(Family::I, "", n) {
            let tab = rsk(&t).unwrap();
            assert_eq!(tab.descent_set(), t.descent_set());
            assert_eq!(rsk_inv(&tab), t);
            assert_eq!(tab.num_cols() < 4, !inc.occurs_in(t.as_slice()));
            assert_eq!(tab.num_rows() < 4, !dec.occurs_in(t.as_slice()));
        }
    }
}

#[test]
fn descent_complement_is_an_involution() {
    for n in 0..=8 {
        for t in class(Family::I, "", n) {
            let u = descent_complement(&t).unwrap();
            assert!(u.is_involution());
            assert_eq!(u.descent_set(), t.descent_set().complement_in(n));
            assert_eq!(descent_complement(&u).unwrap(), t);
        }
    }
    assert_eq!(
        descent_complement(&"2 1 4 3".parse().unwrap()).unwrap().descent_set(),
        DescentSet::from_positions(vec![2])
    );
}

#[test]
fn descent_complement_maps_ai_1234_onto_rai_4321() {
    for n in 0..=10 {
        let image: BTreeSet<_> = class(Family::AI, "1234", n)
            .iter()
            .map(|t| descent_complement(t).unwrap())
            .collect();
        let target: BTreeSet<_> = class(Family::RAI, "4321", n).into_iter().collect();
        assert_eq!(image, target, "n = {n}");
    }
}

#[test]
fn jaggard_swap_is_a_bijection_1243_to_2143() {
    for n in 0..=9 {
        let dom = class(Family::AI, "1243", n);
        let mut image = BTreeSet::new();
        for p in &dom {
            let q = jaggard_swap(p, &[4, 3]).unwrap_or_else(|e| panic!("{p}: {e}"));
            assert!(q.is_involution() && q.is_alternating());
            assert!(!"2143".parse::<Pattern>().unwrap().occurs_in(q.as_slice()), "{p} -> {q}");
            let act = active_dots(p, &[4, 3]).unwrap();
            for i in 1..=n {
                if !act.contains(&i) {
                    assert_eq!(p.at(i), q.at(i));
                }
            }
            image.insert(q);
        }
        assert_eq!(image.len(), dom.len());
        assert_eq!(image.len(), class(Family::AI, "2143", n).len(), "n = {n}");
    }
}

#[test]
fn jaggard_lambda_is_self_conjugate() {
    for n in 0..=9 {
        for tail in [&[4u32, 3][..], &[3, 4], &[4, 3, 5], &[3, 5, 4]] {
            for p in class(Family::AI, "", n) {
                let lam = young_lambda(&p, tail).unwrap();
                assert!(lam.is_self_conjugate(), "{p}");
                assert!(lam.dots.iter().all(|&(c, r)| lam.contains_cell(c, r)));
            }
        }
    }
}

use std::collections::BTreeSet;

use schubres::building::{build_building, check_building_facts, dedup_rank_matrix, nonredundant_counts};
use schubres::permcomb::{
    bruhat_leq, bubblesort_word, last_occurrence_indices, sum_formula_indices, Permutation,
};

/// Products of all reduced subwords of a reduced word of `w`.
fn subword_interval(w: &Permutation) -> BTreeSet<Permutation> {
    let word = bubblesort_word(w);
    let l = word.len();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << l) {
        let sub: Vec<usize> = (0..l)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| word.letters[i])
            .collect();
        let u = Permutation::from_word(w.n(), &sub);
        if u.length() == sub.len() {
            out.insert(u);
        }
    }
    out
}

#[test]
fn bruhat_matches_subword_oracle() {
    for n in 1..=4 {
        let all = Permutation::all(n);
        for w in &all {
            let below = subword_interval(w);
            for u in &all {
                assert_eq!(bruhat_leq(u, w).unwrap(), below.contains(u), "{u} <= {w}");
            }
        }
    }
}

#[test]
fn rank_matrix_against_image_sets() {
    for n in 1..=6 {
        for w in Permutation::all(n) {
            let r = w.rank_matrix();
            for p in 1..=n {
                let image: BTreeSet<usize> = w.one_line()[..p].iter().copied().collect();
                for q in 1..=n {
                    assert_eq!(r.get(p, q), image.range(..=q).count());
                    assert!(r.get(p, q) - r.get(p, q - 1) <= 1);
                    assert!(r.get(p, q) - r.get(p - 1, q) <= 1);
                }
                assert_eq!(r.get(p, n), p);
                assert_eq!(r.get(n, p), p);
            }
            assert_eq!(w.jump_points(), w.one_line());
        }
    }
}

#[test]
fn bubblesort_words_are_reduced() {
    for n in 1..=6 {
        for w in Permutation::all(n) {
            let word = bubblesort_word(&w);
            assert_eq!(word.product(), w);
            assert_eq!(word.len(), w.length());
            assert_eq!(word.blocks.len(), n.saturating_sub(1));
            // Block t_1 is s_{w(n)} ... s_{n-1}.
            if n >= 2 {
                let expected: Vec<usize> = (w.at(n)..n).collect();
                assert_eq!(word.block(0), expected.as_slice());
            }
        }
    }
}

#[test]
fn sum_formula_agrees_on_nonempty_blocks() {
    let mut disagreements = 0;
    for n in 2..=6 {
        for w in Permutation::all(n) {
            let word = bubblesort_word(&w);
            let last = last_occurrence_indices(&word);
            let formula = sum_formula_indices(&w);
            for i in 1..n {
                if !word.block(n - i - 1).is_empty() {
                    assert_eq!(last[i - 1], Some(formula[i - 1]), "{w}, i = {i}");
                } else if last[i - 1] != Some(formula[i - 1]) {
                    disagreements += 1;
                }
            }
        }
    }
    assert!(disagreements > 0);
}

fn neighbour_dedup(w: &Permutation) -> Vec<Vec<(usize, usize)>> {
    let n = w.n();
    let r = w.rank_matrix();
    let mut out = vec![Vec::new(); n - 1];
    for p in 1..=n {
        for q in 1..=n {
            let v = r.get(p, q);
            let left = q > 1 && r.get(p, q - 1) == v;
            let up = p > 1 && r.get(p - 1, q) == v;
            if v != 0 && v != n && !left && !up {
                out[v - 1].push((p, q));
            }
        }
    }
    for level in &mut out {
        level.sort();
    }
    out
}

#[test]
fn building_sweep_up_to_six() {
    for n in 2..=6 {
        for w in Permutation::all(n) {
            let b = build_building(&w);
            let counts = nonredundant_counts(&w);
            assert_eq!(counts.iter().sum::<usize>(), w.length() + n - 1, "{w}");
            assert!(counts.iter().all(|&c| c > 0));
            assert_eq!(counts, dedup_rank_matrix(&w).counts(), "{w}");
            assert_eq!(b.floors, neighbour_dedup(&w), "{w}");
            for (i, floor) in b.floors.iter().enumerate() {
                assert!(floor.windows(2).all(|p| p[0].0 < p[1].0));
                assert!(floor.iter().all(|&(a, c)| a > i && c > i));
            }
            check_building_facts(&w).unwrap();
        }
    }
}

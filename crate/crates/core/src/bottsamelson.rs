//! Bott-Samelson varieties of a word over a prime field, and the
//! isomorphism between the bubblesort Bott-Samelson variety and `Ŝ^w`.

use std::collections::{BTreeMap, BTreeSet};

use crate::biflag::{enumerate_shat, project_to_flag, standard_frames, CompleteFlag, GridPoint};
use crate::error::{Error, Result};
use crate::exactlin::{Fp, Subspace};
use crate::permcomb::{
    bs_incidence, bubblesort_word, last_occurrence_indices, sum_formula_indices, Permutation,
    ReducedWord, SpaceRef,
};
use crate::report::{check_budget, EnumReport, ReportConfig};

/// `V_1, …, V_l` with `dim V_j = d_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BsPoint {
    pub spaces: Vec<Subspace>,
}

fn resolve<'a>(r: SpaceRef, spaces: &'a [Subspace], fixed: &'a [Subspace]) -> &'a Subspace {
    match r {
        SpaceRef::Index(j) => &spaces[j - 1],
        SpaceRef::Fixed(i) => &fixed[i],
    }
}

/// All points of the Bott-Samelson variety of `letters` in `GF(p)^n`,
/// choosing `V_j` in index order.
pub fn enumerate_bs(letters: &[usize], n: usize, field: Fp, budget: u128) -> Result<Vec<BsPoint>> {
    if let Some(&bad) = letters.iter().find(|&&d| d == 0 || d >= n) {
        return Err(Error::InvalidPermutation(format!("letter s_{bad} outside S_{n}")));
    }
    let estimate = (field.p() as u128 + 1).saturating_pow(letters.len() as u32);
    check_budget(estimate, budget)?;
    let incidence = bs_incidence(letters);
    let frames = standard_frames(n, field);
    let mut spaces = Vec::with_capacity(letters.len());
    let mut out = Vec::new();
    bs_from(&incidence, &frames.f, &mut spaces, &mut out)?;
    Ok(out)
}

fn bs_from(
    incidence: &[crate::permcomb::BsLetter],
    fixed: &[Subspace],
    spaces: &mut Vec<Subspace>,
    out: &mut Vec<BsPoint>,
) -> Result<()> {
    let j = spaces.len();
    if j == incidence.len() {
        out.push(BsPoint {
            spaces: spaces.clone(),
        });
        return Ok(());
    }
    let inc = &incidence[j];
    let lower = resolve(inc.left, spaces, fixed).clone();
    let upper = resolve(inc.right, spaces, fixed).clone();
    if !upper.contains(&lower)? {
        return Ok(());
    }
    for v in upper.subspaces_containing(&lower, inc.letter)? {
        spaces.push(v);
        bs_from(incidence, fixed, spaces, out)?;
        spaces.pop();
    }
    Ok(())
}

/// The flag `(V_{p(1)}, …, V_{p(n-1)}, E)`, with `F_i` in place of an
/// absent letter `s_i`.
pub fn bs_projection(pt: &BsPoint, word: &ReducedWord, field: Fp) -> CompleteFlag {
    let n = word.n;
    let mut spaces: Vec<Subspace> = last_occurrence_indices(word)
        .into_iter()
        .enumerate()
        .map(|(i, p)| match p {
            Some(j) => pt.spaces[j - 1].clone(),
            None => Subspace::coordinate(n, field, 0..=i),
        })
        .collect();
    spaces.push(Subspace::full(n, field));
    CompleteFlag { spaces }
}

/// Sends a point of `Ŝ^w` to the bubblesort Bott-Samelson variety: the
/// block moving `w(m)` reads row `m - 1` of the grid on the columns to the
/// right of `w(m)` among those not yet removed.
pub fn bbs_map(w: &Permutation, pt: &GridPoint) -> BsPoint {
    let n = w.n();
    let mut spaces = Vec::with_capacity(w.length());
    let mut remaining: Vec<usize> = (1..=n).collect();
    for m in (2..=n).rev() {
        let r = remaining.iter().position(|&c| c == w.at(m)).unwrap();
        for &c in &remaining[r + 1..] {
            spaces.push(pt.get(m - 1, c).clone());
        }
        remaining.remove(r);
    }
    BsPoint { spaces }
}

/// Chains `F_{w(n)-1} ⊆ W_1 ⊂ … ⊂ W_m` with `W_t ⊆ F_{w(n)+t}`, built as
/// Kempf-Laksov chains in the complement `span(e_{w(n)}, …, e_n)`.
pub fn first_block_tower(w: &Permutation, field: Fp) -> Vec<Vec<Subspace>> {
    let n = w.n();
    let a = w.at(n);
    let m = n - a;
    let base = Subspace::coordinate(n, field, 0..a - 1);
    let windows: Vec<Subspace> = (1..=m)
        .map(|i| Subspace::coordinate(n, field, a - 1..a + i))
        .collect();
    let mut out = Vec::new();
    let mut chain: Vec<Subspace> = Vec::new();
    fn grow(
        chain: &mut Vec<Subspace>,
        windows: &[Subspace],
        base: &Subspace,
        out: &mut Vec<Vec<Subspace>>,
    ) {
        let i = chain.len();
        if i == windows.len() {
            out.push(chain.iter().map(|l| base.sum(l).unwrap()).collect());
            return;
        }
        let lower = chain
            .last()
            .cloned()
            .unwrap_or_else(|| Subspace::zero(base.ambient_dim(), base.field()));
        for next in windows[i].subspaces_containing(&lower, i + 1).unwrap() {
            chain.push(next);
            grow(chain, windows, base, out);
            chain.pop();
        }
    }
    grow(&mut chain, &windows, &base, &mut out);
    out
}

fn config(w: &Permutation, field: Fp, budget: u128) -> ReportConfig {
    ReportConfig {
        perm: Some(w.one_line().to_vec()),
        n: Some(w.n()),
        field: Some(field.p()),
        budget: Some(budget),
        ..ReportConfig::default()
    }
}

/// Enumerates the bubblesort Bott-Samelson variety and reports its size and
/// the word data.
pub fn enumerate_report(w: &Permutation, field: Fp, budget: u128) -> Result<EnumReport> {
    let mut report = EnumReport::new("bs enumerate", config(w, field, budget));
    let word = bubblesort_word(w);
    let pts = enumerate_bs(&word.letters, w.n(), field, budget)?;
    report.count("bs_points", pts.len() as u128);
    report.count("length", word.len() as u128);
    let expected = (field.p() as u128 + 1).pow(word.len() as u32);
    report.check_with(
        "bs_count_is_p_plus_1_to_length",
        pts.len() as u128 == expected,
        format!("{} vs {expected}", pts.len()),
    );
    let flags_ok = pts.iter().all(|pt| bs_projection(pt, &word, field).is_valid());
    report.check("projection_is_complete_flag", flags_ok);
    record_formula_discrepancy(&mut report, w, &word);
    Ok(report)
}

fn record_formula_discrepancy(report: &mut EnumReport, w: &Permutation, word: &ReducedWord) {
    let last = last_occurrence_indices(word);
    let formula = sum_formula_indices(w);
    let differing: Vec<String> = last
        .iter()
        .zip(&formula)
        .enumerate()
        .filter(|(_, (l, f))| **l != Some(**f))
        .map(|(i, (l, f))| {
            let l = l.map_or("absent".to_string(), |x| x.to_string());
            format!("p({})={l} vs formula {f}", i + 1)
        })
        .collect();
    report.observe("last_occurrence_vs_sum_formula", {
        if differing.is_empty() {
            "agree".to_string()
        } else {
            differing.join("; ")
        }
    });
}

/// Checks that [`bbs_map`] is a bijection `Ŝ^w → BS^w` commuting with the
/// projections to the flag manifold, and that the first block of the
/// Bott-Samelson variety is the expected Kempf-Laksov tower.
pub fn bbs_iso(w: &Permutation, field: Fp, budget: u128) -> Result<EnumReport> {
    let n = w.n();
    let mut report = EnumReport::new("bs iso", config(w, field, budget));
    let word = bubblesort_word(w);
    let shat = enumerate_shat(w, field, budget)?;
    let bs = enumerate_bs(&word.letters, n, field, budget)?;
    let bs_set: BTreeSet<&BsPoint> = bs.iter().collect();
    report.count("shat_points", shat.len() as u128);
    report.count("bs_points", bs.len() as u128);

    let mut images = BTreeSet::new();
    let mut lands = true;
    let mut commutes = true;
    for pt in &shat {
        let image = bbs_map(w, pt);
        if !bs_set.contains(&image) {
            lands = false;
            report.witness("map_lands_in_bs", &image.spaces.iter().collect::<Vec<_>>());
        }
        if bs_projection(&image, &word, field) != project_to_flag(pt) {
            commutes = false;
            report.witness("commutes_with_projections", &image.spaces.iter().collect::<Vec<_>>());
        }
        images.insert(image);
    }
    report.check("map_lands_in_bs", lands);
    report.check("injective", images.len() == shat.len());
    report.check("surjective", images.len() == bs.len());
    report.check("commutes_with_projections", commutes);

    if n >= 2 && w.at(n) != n {
        let m = n - w.at(n);
        let mut fibers: BTreeMap<&[Subspace], usize> = BTreeMap::new();
        for pt in &bs {
            *fibers.entry(&pt.spaces[..m]).or_default() += 1;
        }
        let tower: BTreeSet<Vec<Subspace>> = first_block_tower(w, field).into_iter().collect();
        let projected: BTreeSet<Vec<Subspace>> = fibers.keys().map(|k| k.to_vec()).collect();
        report.count("first_block_points", projected.len() as u128);
        report.check("first_block_is_kl_tower", projected == tower);
        let rest = (field.p() as u128 + 1).pow((word.len() - m) as u32);
        report.check(
            "first_block_fibers_uniform",
            fibers.values().all(|&c| c as u128 == rest),
        );
    }
    record_formula_discrepancy(&mut report, w, &word);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::DEFAULT_BUDGET as B;

    fn gf(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_bs(&[], 3, gf(2), B).unwrap().len(), 1);
        assert_eq!(enumerate_bs(&[1, 2], 3, gf(2), B).unwrap().len(), 9);
        assert_eq!(enumerate_bs(&[2], 4, gf(3), B).unwrap().len(), 4);
        assert!(enumerate_bs(&[3], 3, gf(2), B).is_err());
    }

    #[test]
    fn projection_examples() {
        let id = bubblesort_word(&Permutation::identity(3));
        let pt = BsPoint { spaces: vec![] };
        assert_eq!(bs_projection(&pt, &id, gf(2)), CompleteFlag::standard(3, gf(2)));
        let word = bubblesort_word(&perm("2,3,1"));
        for pt in enumerate_bs(&word.letters, 3, gf(2), B).unwrap() {
            let flag = bs_projection(&pt, &word, gf(2));
            assert_eq!(flag.get(1), &pt.spaces[0]);
            assert_eq!(flag.get(2), &pt.spaces[1]);
            assert!(flag.is_valid());
        }
    }

    #[test]
    fn iso_small() {
        for w in ["1,2,3", "2,1,3", "3,2,1", "2,3,1"] {
            let r = bbs_iso(&perm(w), gf(2), B).unwrap();
            assert!(r.passed(), "{w}: {:?}", r.failed_checks());
        }
        let r = bbs_iso(&perm("2,1,3"), gf(3), B).unwrap();
        assert_eq!(r.counts["bs_points"], 4);
        assert!(r.passed());
    }
}

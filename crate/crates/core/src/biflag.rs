//! Bioriented flag varieties of a permutation over a prime field, their
//! projection to the flag manifold, and Schubert varieties in it.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{gaussian_binomial, q_integer, Fp, Subspace};
use crate::permcomb::{Permutation, RankMatrix};
use crate::report::{check_budget, EnumReport, ReportConfig};

/// The standard flags `F_i = span(e_1..e_i)` and `G^i = span(e_{i+1}..e_n)`,
/// indexed `0..=n`.
#[derive(Clone, Debug)]
pub struct Frames {
    pub f: Vec<Subspace>,
    pub g: Vec<Subspace>,
}

pub fn standard_frames(n: usize, field: Fp) -> Frames {
    Frames {
        f: (0..=n).map(|i| Subspace::coordinate(n, field, 0..i)).collect(),
        g: (0..=n).map(|i| Subspace::coordinate(n, field, i..n)).collect(),
    }
}

/// `ℓ_1 ⊂ … ⊂ ℓ_n = E` with `dim ℓ_i = i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompleteFlag {
    pub spaces: Vec<Subspace>,
}

impl CompleteFlag {
    pub fn standard(n: usize, field: Fp) -> Self {
        CompleteFlag {
            spaces: (1..=n).map(|i| Subspace::coordinate(n, field, 0..i)).collect(),
        }
    }

    /// `ℓ_i`, 1-based; `ℓ_0 = 0`.
    pub fn get(&self, i: usize) -> &Subspace {
        &self.spaces[i - 1]
    }

    pub fn is_valid(&self) -> bool {
        self.spaces.iter().enumerate().all(|(i, s)| s.dim() == i + 1)
            && self
                .spaces
                .windows(2)
                .all(|w| w[1].contains(&w[0]).unwrap_or(false))
    }

    /// `dim ℓ_p ∩ F_q` for `1 ≤ p, q ≤ n`.
    pub fn rank_against(&self, frames: &Frames) -> Vec<Vec<usize>> {
        let n = self.spaces.len();
        (1..=n)
            .map(|p| {
                (1..=n)
                    .map(|q| self.get(p).intersect(&frames.f[q]).unwrap().dim())
                    .collect()
            })
            .collect()
    }
}

/// All complete flags of `GF(p)^n`.
pub fn all_complete_flags(n: usize, field: Fp, budget: u128) -> Result<Vec<CompleteFlag>> {
    let estimate: u128 = (1..=n).map(|i| q_integer(i, field.p())).product();
    check_budget(estimate, budget)?;
    let mut out = Vec::new();
    let mut chain = Vec::with_capacity(n);
    flags_from(&mut chain, n, field, &mut out);
    Ok(out)
}

fn flags_from(chain: &mut Vec<Subspace>, n: usize, field: Fp, out: &mut Vec<CompleteFlag>) {
    if chain.len() == n {
        out.push(CompleteFlag {
            spaces: chain.clone(),
        });
        return;
    }
    let lower = chain.last().cloned().unwrap_or_else(|| Subspace::zero(n, field));
    let full = Subspace::full(n, field);
    for next in full.subspaces_containing(&lower, chain.len() + 1).unwrap() {
        chain.push(next);
        flags_from(chain, n, field, out);
        chain.pop();
    }
}

/// A grid `ℓ_{p,q}`, `1 ≤ p, q ≤ n`, with `dim ℓ_{p,q} = d_pq` and
/// inclusions along rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    n: usize,
    cells: Vec<Subspace>,
}

impl GridPoint {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `ℓ_{p,q}`, 1-based.
    pub fn get(&self, p: usize, q: usize) -> &Subspace {
        &self.cells[(p - 1) * self.n + q - 1]
    }

    pub fn cells(&self) -> &[Subspace] {
        &self.cells
    }

    /// Checks dimensions and both families of inclusions.
    pub fn is_valid(&self, rank: &RankMatrix) -> bool {
        let n = self.n;
        for p in 1..=n {
            for q in 1..=n {
                let c = self.get(p, q);
                if c.dim() != rank.get(p, q) {
                    return false;
                }
                if q < n && !self.get(p, q + 1).contains(c).unwrap() {
                    return false;
                }
                if p < n && !self.get(p + 1, q).contains(c).unwrap() {
                    return false;
                }
            }
        }
        true
    }
}

/// The resolution projection: the last column as a complete flag.
pub fn project_to_flag(pt: &GridPoint) -> CompleteFlag {
    CompleteFlag {
        spaces: (1..=pt.n).map(|p| pt.get(p, pt.n).clone()).collect(),
    }
}

/// Exact number of grid points: each cell has the same number of choices
/// regardless of the cells already fixed.
pub fn grid_count(w: &Permutation, q: u32, pinned_bottom: bool) -> u128 {
    let n = w.n();
    let r = w.rank_matrix();
    let mut total: u128 = 1;
    for p in 1..=n {
        if pinned_bottom && p == n {
            continue;
        }
        for c in 1..=n {
            let lower = r.get(p, c - 1);
            let upper = if p == n { n } else { r.get(p + 1, c) };
            total = total.saturating_mul(gaussian_binomial(upper - lower, r.get(p, c) - lower, q));
        }
    }
    total
}

fn enumerate_grid(
    w: &Permutation,
    field: Fp,
    pinned_bottom: bool,
    budget: u128,
) -> Result<Vec<GridPoint>> {
    let n = w.n();
    check_budget(grid_count(w, field.p(), pinned_bottom), budget)?;
    let rank = w.rank_matrix();
    let mut order = Vec::with_capacity(n * n);
    for p in (1..=n).rev() {
        for q in 1..=n {
            order.push((p, q));
        }
    }
    let mut cells = vec![Subspace::zero(n, field); n * n];
    let mut start = 0;
    if pinned_bottom {
        for q in 1..=n {
            cells[(n - 1) * n + q - 1] = Subspace::coordinate(n, field, 0..q);
        }
        start = n;
    }
    let mut out = Vec::new();
    let full = Subspace::full(n, field);
    fill(&order, start, &rank, &full, &mut cells, &mut out);
    Ok(out)
}

fn fill(
    order: &[(usize, usize)],
    idx: usize,
    rank: &RankMatrix,
    full: &Subspace,
    cells: &mut Vec<Subspace>,
    out: &mut Vec<GridPoint>,
) {
    let n = rank.n();
    if idx == order.len() {
        out.push(GridPoint {
            n,
            cells: cells.clone(),
        });
        return;
    }
    let (p, q) = order[idx];
    let lower = if q == 1 {
        Subspace::zero(n, full.field())
    } else {
        cells[(p - 1) * n + q - 2].clone()
    };
    let upper = if p == n {
        full.clone()
    } else {
        cells[p * n + q - 1].clone()
    };
    for choice in upper.subspaces_containing(&lower, rank.get(p, q)).unwrap() {
        cells[(p - 1) * n + q - 1] = choice;
        fill(order, idx + 1, rank, full, cells, out);
    }
}

/// All points of the bioriented flag variety `Fl^w`.
pub fn enumerate_flw(w: &Permutation, field: Fp, budget: u128) -> Result<Vec<GridPoint>> {
    enumerate_grid(w, field, false, budget)
}

/// Points of `Fl^w` whose bottom row is the standard flag.
pub fn enumerate_shat(w: &Permutation, field: Fp, budget: u128) -> Result<Vec<GridPoint>> {
    enumerate_grid(w, field, true, budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SchubertMode {
    /// `dim ℓ_p ∩ F_q = d_pq`.
    Cell,
    /// `dim ℓ_p ∩ F_q ≥ d_pq`.
    Closed,
}

/// Complete flags in the Schubert cell or variety of `w`, by filtering
/// every flag.
pub fn schubert_flag_points(
    w: &Permutation,
    field: Fp,
    mode: SchubertMode,
    budget: u128,
) -> Result<Vec<CompleteFlag>> {
    let n = w.n();
    let frames = standard_frames(n, field);
    let rank = w.rank_matrix();
    Ok(all_complete_flags(n, field, budget)?
        .into_iter()
        .filter(|flag| {
            let dims = flag.rank_against(&frames);
            (1..=n).all(|p| {
                (1..=n).all(|q| {
                    let (have, want) = (dims[p - 1][q - 1], rank.get(p, q));
                    match mode {
                        SchubertMode::Cell => have == want,
                        SchubertMode::Closed => have >= want,
                    }
                })
            })
        })
        .collect())
}

/// The grid `ℓ_{p,q} = ℓ_p ∩ F_q` over a flag.
pub fn reconstruct_grid(flag: &CompleteFlag, frames: &Frames) -> GridPoint {
    let n = flag.spaces.len();
    let mut cells = Vec::with_capacity(n * n);
    for p in 1..=n {
        for q in 1..=n {
            cells.push(flag.get(p).intersect(&frames.f[q]).unwrap());
        }
    }
    GridPoint { n, cells }
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

/// Enumerates `Fl^w` and `Ŝ^w` and reports their sizes.
pub fn enumerate_report(w: &Permutation, field: Fp, budget: u128) -> Result<EnumReport> {
    let mut report = EnumReport::new("biflag enumerate", config(w, field, budget));
    let rank = w.rank_matrix();
    let flw = enumerate_flw(w, field, budget)?;
    let shat = enumerate_shat(w, field, budget)?;
    report.count("flw_points", flw.len() as u128);
    report.count("shat_points", shat.len() as u128);
    report.count("length", w.length() as u128);
    report.check("flw_points_valid", flw.iter().all(|g| g.is_valid(&rank)));
    report.check("shat_points_valid", shat.iter().all(|g| g.is_valid(&rank)));
    report.check(
        "flw_count_matches_tower",
        flw.len() as u128 == grid_count(w, field.p(), false),
    );
    let expected = (field.p() as u128 + 1).pow(w.length() as u32);
    report.check_with(
        "shat_count_is_p_plus_1_to_length",
        shat.len() as u128 == expected,
        format!("{} vs {expected}", shat.len()),
    );
    Ok(report)
}

/// Checks that the last-column projection from `Ŝ^w` lands in the closed
/// Schubert variety and is bijective over the cell.
pub fn verify_flres(w: &Permutation, field: Fp, budget: u128) -> Result<EnumReport> {
    let n = w.n();
    if n == 0 {
        return Err(Error::InvalidPermutation("empty permutation".into()));
    }
    let mut report = EnumReport::new("biflag verify", config(w, field, budget));
    let frames = standard_frames(n, field);
    let rank = w.rank_matrix();
    let shat = enumerate_shat(w, field, budget)?;
    let closed: BTreeSet<CompleteFlag> =
        schubert_flag_points(w, field, SchubertMode::Closed, budget)?.into_iter().collect();
    let cell = schubert_flag_points(w, field, SchubertMode::Cell, budget)?;
    let q = field.p() as u128;
    let l = w.length() as u32;

    report.count("shat_points", shat.len() as u128);
    report.count("closed_points", closed.len() as u128);
    report.count("cell_points", cell.len() as u128);
    report.check("shat_count", shat.len() as u128 == (q + 1).pow(l));
    report.check("cell_count", cell.len() as u128 == q.pow(l));

    let mut fibers: BTreeMap<CompleteFlag, Vec<&GridPoint>> = BTreeMap::new();
    let mut inside = true;
    let mut rank_ok = true;
    for pt in &shat {
        let flag = project_to_flag(pt);
        if !closed.contains(&flag) {
            inside = false;
            report.witness("image_in_closed", &flag.spaces.iter().collect::<Vec<_>>());
        }
        for p in 1..=n {
            for c in 1..=n {
                let meet = flag.get(p).intersect(&frames.f[c])?;
                let d = rank.get(p, c);
                let equal_dim = meet.dim() == d;
                if meet.dim() < d || equal_dim != (&meet == pt.get(p, c)) {
                    rank_ok = false;
                }
            }
        }
        fibers.entry(flag).or_default().push(pt);
    }
    report.check("image_in_closed", inside);
    report.check("rank_inequality_and_equality_case", rank_ok);

    let mut bijective = true;
    for flag in &cell {
        let pre = fibers.get(flag).map_or(&[][..], Vec::as_slice);
        let rebuilt = reconstruct_grid(flag, &frames);
        if pre.len() != 1 || *pre[0] != rebuilt {
            bijective = false;
            report.witness("cell_bijection", &flag.spaces.iter().collect::<Vec<_>>());
        }
    }
    report.check("cell_bijection", bijective);

    let image_size = fibers.len();
    report.count("image_points", image_size as u128);
    report.observe("surjective_onto_closed", image_size == closed.len());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    const B: u128 = crate::report::DEFAULT_BUDGET;

    #[test]
    fn frames_small() {
        let fr = standard_frames(2, gf(2));
        assert_eq!(fr.f[1], Subspace::coordinate(2, gf(2), [0]));
        assert_eq!(fr.g[1], Subspace::coordinate(2, gf(2), [1]));
        assert!(fr.g[2].is_zero());
        assert_eq!(fr.f[2].dim(), 2);
        for i in 0..=2 {
            assert!(fr.f[i].intersect(&fr.g[i]).unwrap().is_zero());
        }
    }

    #[test]
    fn flw_counts() {
        assert_eq!(enumerate_flw(&Permutation::identity(3), gf(2), B).unwrap().len(), 21);
        // Both ℓ_{1,2} and ℓ_{2,1} are free lines in GF(2)^2.
        assert_eq!(enumerate_flw(&perm("2,1"), gf(2), B).unwrap().len(), 9);
    }

    #[test]
    fn shat_counts() {
        assert_eq!(enumerate_shat(&Permutation::identity(3), gf(2), B).unwrap().len(), 1);
        assert_eq!(enumerate_shat(&perm("2,3,1"), gf(2), B).unwrap().len(), 9);
        assert_eq!(enumerate_shat(&perm("2,1"), gf(3), B).unwrap().len(), 4);
    }

    #[test]
    fn projection_of_transposition() {
        let pts = enumerate_shat(&perm("2,1"), gf(2), B).unwrap();
        let lines: BTreeSet<Subspace> = pts.iter().map(|g| project_to_flag(g).get(1).clone()).collect();
        assert_eq!(lines.len(), 3);
    }

    #[test]
    fn schubert_points() {
        let id = Permutation::identity(3);
        let cell = schubert_flag_points(&id, gf(2), SchubertMode::Cell, B).unwrap();
        assert_eq!(cell, vec![CompleteFlag::standard(3, gf(2))]);
        let top = schubert_flag_points(&Permutation::longest(3), gf(2), SchubertMode::Closed, B).unwrap();
        assert_eq!(top.len(), 21);
    }

    #[test]
    fn budget_refusal() {
        let err = enumerate_flw(&Permutation::longest(4), gf(2), 10).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn verify_small() {
        let r = verify_flres(&perm("3,1,2"), gf(2), B).unwrap();
        assert!(r.passed(), "{:?}", r.failed_checks());
        let top = verify_flres(&Permutation::longest(3), gf(2), B).unwrap();
        assert_eq!(top.counts["image_points"], 21);
    }
}

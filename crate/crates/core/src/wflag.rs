//! The constrained W-flag variety `𝒢 ⊂ Π Gr_i(V_i^i)`, its bioriented
//! resolution `Ĝ`, and the maps relating both to `ℍ*₀` and to the partial
//! flag manifold.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exactlin::{gaussian_binomial, graph, project, q_integer, sum_all, LinearMap, Subspace};
use crate::grassfib::{FrameConfig, MultiIndex};
use crate::report::{check_budget, EnumReport};

/// `(ℓ_1, …, ℓ_k)` with `ℓ_i ∈ Gr_i(V_i^i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GCalPoint {
    pub spaces: Vec<Subspace>,
}

impl GCalPoint {
    /// `ℓ_i`, 1-based.
    pub fn get(&self, i: usize) -> &Subspace {
        &self.spaces[i - 1]
    }
}

/// Lower-triangular grid `ℓ_j^i`, `1 ≤ j ≤ i ≤ k`; `rows[i - 1][j - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GHatPoint {
    pub rows: Vec<Vec<Subspace>>,
}

impl GHatPoint {
    pub fn get(&self, j: usize, i: usize) -> &Subspace {
        &self.rows[i - 1][j - 1]
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }
}

/// `W_1 ⊂ … ⊂ W_k` with `dim W_i = β_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialFlag {
    pub spaces: Vec<Subspace>,
}

impl PartialFlag {
    /// `(F_{β_1}, …, F_{β_k})`.
    pub fn standard(cfg: &FrameConfig) -> Self {
        PartialFlag {
            spaces: (1..=cfg.k()).map(|i| cfg.f_node(i).clone()).collect(),
        }
    }

    pub fn get(&self, i: usize) -> &Subspace {
        &self.spaces[i - 1]
    }
}

/// Target `Σ_{j=i+1}^{k+1} L_j^⊥` of `A_i` in `ℍ*₀`.
pub fn hstar0_target(cfg: &FrameConfig, i: usize) -> Subspace {
    cfg.perp_sum(i + 1..=cfg.k() + 1)
}

/// Every point `(A_1, …, A_k)` of `ℍ*₀`.
pub fn hstar0_points(cfg: &FrameConfig, budget: u128) -> Result<Vec<Vec<LinearMap>>> {
    let dim = cfg.multi_index().hstar0_dim();
    check_budget((cfg.field().p() as u128).saturating_pow(dim as u32), budget)?;
    Ok((1..=cfg.k())
        .map(|i| LinearMap::enumerate(cfg.line(i), &hstar0_target(cfg, i)))
        .multi_cartesian_product()
        .collect())
}

/// `B_i : Σ_{j≤i} L_j → Σ_{j>i} L_j^⊥` with `B_i|_{L_j}` the part of `A_j`
/// outside `L_{j+1}^⊥ + … + L_i^⊥`.
pub fn compress_maps(cfg: &FrameConfig, a: &[LinearMap]) -> Result<Vec<LinearMap>> {
    let k = cfg.k();
    if a.len() != k {
        return Err(Error::MapType(format!("{} maps for k = {k}", a.len())));
    }
    for (i, ai) in a.iter().enumerate() {
        if ai.domain() != cfg.line(i + 1) || ai.target() != &hstar0_target(cfg, i + 1) {
            return Err(Error::MapType(format!("A_{} is not in Hom(L_i, Σ_{{j>i}} L_j^⊥)", i + 1)));
        }
    }
    (1..=k)
        .map(|i| {
            let target = hstar0_target(cfg, i);
            let pairs = (1..=i)
                .map(|j| {
                    let u = cfg.line(j).basis_rows().next().unwrap().to_vec();
                    let image = a[j - 1].apply(&u)?;
                    let dropped = cfg.perp_sum(j + 1..=i);
                    Ok((u, project(&image, &target, &dropped)?))
                })
                .collect::<Result<Vec<_>>>()?;
            LinearMap::from_pairs(cfg.line_sum(1..=i), target, &pairs)
        })
        .collect()
}

/// `(Γ_{B_1}, …, Γ_{B_k})`.
pub fn compressed_point(cfg: &FrameConfig, a: &[LinearMap]) -> Result<GCalPoint> {
    let spaces = compress_maps(cfg, a)?.iter().map(graph).collect::<Result<_>>()?;
    Ok(GCalPoint { spaces })
}

/// `Γ_{B_i} ⊆ Γ_{B_{i+1}} + L_{i+1}^⊥` for all `i < k`.
pub fn graphs_nested(cfg: &FrameConfig, pt: &GCalPoint) -> bool {
    (1..cfg.k()).all(|i| {
        pt.get(i + 1)
            .sum(cfg.perp(i + 1))
            .and_then(|s| s.contains(pt.get(i)))
            .unwrap_or(false)
    })
}

pub fn is_gcal(cfg: &FrameConfig, pt: &GCalPoint) -> bool {
    let k = cfg.k();
    pt.spaces.len() == k
        && (1..=k).all(|i| pt.get(i).dim() == i && cfg.v(i, i).contains(pt.get(i)).unwrap_or(false))
        && graphs_nested(cfg, pt)
}

pub fn is_ghat(cfg: &FrameConfig, pt: &GHatPoint) -> bool {
    let k = cfg.k();
    if pt.k() != k || (1..=k).any(|i| pt.rows[i - 1].len() != i) {
        return false;
    }
    let within = |big: &Subspace, small: &Subspace| big.contains(small).unwrap_or(false);
    for i in 1..=k {
        for j in 1..=i {
            let l = pt.get(j, i);
            if l.dim() != j || !within(&cfg.v(j, i), l) {
                return false;
            }
            if j < i && !within(pt.get(j + 1, i), l) {
                return false;
            }
            if i < k && !within(&pt.get(j, i + 1).sum(cfg.perp(i + 1)).unwrap(), l) {
                return false;
            }
        }
    }
    true
}

fn gcal_estimate(cfg: &FrameConfig) -> u128 {
    let q = cfg.field().p();
    (1..=cfg.k())
        .map(|i| gaussian_binomial(cfg.v(i, i).dim(), i, q))
        .fold(1u128, |a, b| a.saturating_mul(b))
}

/// All points of `𝒢`, choosing `ℓ_k` first and then each `ℓ_i` inside
/// `(ℓ_{i+1} + L_{i+1}^⊥) ∩ V_i^i`.
pub fn enumerate_gcal(cfg: &FrameConfig, budget: u128) -> Result<Vec<GCalPoint>> {
    check_budget(gcal_estimate(cfg), budget)?;
    let k = cfg.k();
    let mut out = Vec::new();
    let mut rev: Vec<Subspace> = Vec::with_capacity(k);
    gcal_from(cfg, &mut rev, &mut out)?;
    Ok(out)
}

fn gcal_from(cfg: &FrameConfig, rev: &mut Vec<Subspace>, out: &mut Vec<GCalPoint>) -> Result<()> {
    let k = cfg.k();
    if rev.len() == k {
        out.push(GCalPoint {
            spaces: rev.iter().rev().cloned().collect(),
        });
        return Ok(());
    }
    let i = k - rev.len();
    let ambient = match rev.last() {
        None => cfg.v(k, k),
        Some(above) => above.sum(cfg.perp(i + 1))?.intersect(&cfg.v(i, i))?,
    };
    for l in ambient.subspaces(i)? {
        rev.push(l);
        gcal_from(cfg, rev, out)?;
        rev.pop();
    }
    Ok(())
}

/// `|Ĝ|` as a product of chain counts: `[n-β_k+1]^k · Π_{i<k} [β_{i+1}-β_i]^i`.
pub fn ghat_tower_count(beta: &MultiIndex, q: u32) -> u128 {
    let k = beta.k();
    let top = q_integer(beta.n() - beta.at(k) + 1, q).pow(k as u32);
    (1..k).fold(top, |acc, i| acc * q_integer(beta.at(i + 1) - beta.at(i), q).pow(i as u32))
}

/// `|𝒢 ∩ U|` as a tower of open Schubert varieties: with `c = n - β_k` and
/// `e_i = β_{i+1} - β_i - 1`, `[c+1] q^{c(k-1)} · Π_{i<k} [e_i+1] q^{e_i(i-1)}`.
pub fn gcal_u_tower_count(beta: &MultiIndex, q: u32) -> u128 {
    let k = beta.k();
    let q128 = q as u128;
    let c = beta.n() - beta.at(k);
    let top = q_integer(c + 1, q) * q128.pow((c * (k - 1)) as u32);
    (1..k).fold(top, |acc, i| {
        let e = beta.at(i + 1) - beta.at(i) - 1;
        acc * q_integer(e + 1, q) * q128.pow((e * (i - 1)) as u32)
    })
}

/// All points of `Ĝ`, row `k` first (a chain with `ℓ_j^k ⊆ V_j^k`), then each
/// higher row a chain with `ℓ_j^i ⊆ ℓ_j^{i+1} + L_{i+1}^⊥`.
pub fn enumerate_ghat(cfg: &FrameConfig, budget: u128) -> Result<Vec<GHatPoint>> {
    let q = cfg.field().p();
    let estimate = (1..=cfg.k())
        .map(|i| gaussian_binomial(cfg.v(i, i).dim(), i, q).saturating_pow(i as u32))
        .fold(1u128, |a, b| a.saturating_mul(b));
    check_budget(estimate.min(ghat_tower_count(cfg.multi_index(), q).saturating_mul(cfg.k() as u128)), budget)?;
    let mut out = Vec::new();
    let mut rows_rev: Vec<Vec<Subspace>> = Vec::new();
    ghat_rows(cfg, &mut rows_rev, &mut out)?;
    Ok(out)
}

fn ghat_rows(cfg: &FrameConfig, rows_rev: &mut Vec<Vec<Subspace>>, out: &mut Vec<GHatPoint>) -> Result<()> {
    let k = cfg.k();
    if rows_rev.len() == k {
        out.push(GHatPoint {
            rows: rows_rev.iter().rev().cloned().collect(),
        });
        return Ok(());
    }
    let i = k - rows_rev.len();
    let uppers: Vec<Subspace> = match rows_rev.last() {
        None => (1..=k).map(|j| cfg.v(j, k)).collect(),
        Some(below) => (1..=i)
            .map(|j| below[j - 1].sum(cfg.perp(i + 1))?.intersect(&cfg.v(j, i)))
            .collect::<Result<_>>()?,
    };
    let mut chains = Vec::new();
    chains_in(&uppers, &mut Vec::new(), &mut chains)?;
    for chain in chains {
        rows_rev.push(chain);
        ghat_rows(cfg, rows_rev, out)?;
        rows_rev.pop();
    }
    Ok(())
}

/// Chains `c_1 ⊂ … ⊂ c_m` with `dim c_j = j` and `c_j ⊆ uppers[j - 1]`.
fn chains_in(uppers: &[Subspace], chain: &mut Vec<Subspace>, out: &mut Vec<Vec<Subspace>>) -> Result<()> {
    let j = chain.len();
    if j == uppers.len() {
        out.push(chain.clone());
        return Ok(());
    }
    let upper = &uppers[j];
    let lower = match chain.last() {
        Some(l) => l.clone(),
        None => Subspace::zero(upper.ambient_dim(), upper.field()),
    };
    if !upper.contains(&lower)? {
        return Ok(());
    }
    for next in upper.subspaces_containing(&lower, j + 1)? {
        chain.push(next);
        chains_in(uppers, chain, out)?;
        chain.pop();
    }
    Ok(())
}

/// `(ℓ_j^i) ↦ (ℓ_i^i)`.
pub fn pi_diag(pt: &GHatPoint) -> GCalPoint {
    GCalPoint {
        spaces: (1..=pt.k()).map(|i| pt.get(i, i).clone()).collect(),
    }
}

/// `dim(ℓ_a ∩ V_j^a) = j` for all `j < a ≤ k`.
pub fn in_u(cfg: &FrameConfig, pt: &GCalPoint) -> bool {
    (1..=cfg.k()).all(|a| (1..a).all(|j| pt.get(a).intersect(&cfg.v(j, a)).unwrap().dim() == j))
}

/// The fiber point over `U`: `ℓ_j^i = ℓ_i ∩ V_j^i`.
pub fn closed_form_lift(cfg: &FrameConfig, pt: &GCalPoint) -> Result<GHatPoint> {
    let rows = (1..=cfg.k())
        .map(|i| (1..=i).map(|j| pt.get(i).intersect(&cfg.v(j, i))).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    Ok(GHatPoint { rows })
}

/// A preimage of `pt` under [`pi_diag`], built one diagonal `i - j = d` at
/// a time from `ℓ_j^{i-1}` and `ℓ_{j+1}^i`.
pub fn lift_to_ghat(cfg: &FrameConfig, pt: &GCalPoint) -> Result<GHatPoint> {
    if !is_gcal(cfg, pt) {
        return Err(Error::NotOnVariety(format!("{:?} is not a point of 𝒢", pt.spaces)));
    }
    let k = cfg.k();
    let mut grid: Vec<Vec<Option<Subspace>>> = (1..=k).map(|i| vec![None; i]).collect();
    for i in 1..=k {
        grid[i - 1][i - 1] = Some(pt.get(i).clone());
    }
    for d in 1..k {
        for j in 1..=k - d {
            let i = j + d;
            let x = grid[i - 2][j - 1].clone().unwrap();
            let y = grid[i - 1][j].clone().unwrap();
            grid[i - 1][j - 1] = Some(lift_step(&x, &y, &cfg.v(j, i), cfg.perp(i), j)?);
        }
    }
    let out = GHatPoint {
        rows: grid
            .into_iter()
            .map(|row| row.into_iter().map(Option::unwrap).collect())
            .collect(),
    };
    if !is_ghat(cfg, &out) {
        return Err(Error::NotOnVariety("lift left Ĝ".into()));
    }
    Ok(out)
}

/// A `j`-dimensional `z ⊆ y ∩ lower` with `x ⊆ z + perp`.
fn lift_step(x: &Subspace, y: &Subspace, lower: &Subspace, perp: &Subspace, j: usize) -> Result<Subspace> {
    let meet = y.intersect(lower)?;
    if meet.dim() == j {
        return Ok(meet);
    }
    let mut z = x.project(lower, perp)?;
    for row in y.basis_rows() {
        if z.dim() == j {
            break;
        }
        if !z.contains_vector(row)? {
            z = z.sum(&Subspace::span(&[row], z.ambient_dim(), z.field())?)?;
        }
    }
    if z.dim() != j || !y.contains(&z)? {
        return Err(Error::NotOnVariety(format!("no {j}-dimensional completion inside {y:?}")));
    }
    Ok(z)
}

/// `(ℓ_i + Σ_{j≤i} L_j^⊥)_i`, checked to have dimensions `β_i`.
pub fn psi_tilde(cfg: &FrameConfig, pt: &GCalPoint) -> Result<PartialFlag> {
    let spaces = (1..=cfg.k())
        .map(|i| {
            let w = pt.get(i).sum(&cfg.perp_sum(1..=i))?;
            if w.dim() != cfg.multi_index().at(i) {
                return Err(Error::BadDimension {
                    dim: w.dim(),
                    available: cfg.multi_index().at(i),
                });
            }
            Ok(w)
        })
        .collect::<Result<_>>()?;
    Ok(PartialFlag { spaces })
}

/// `Ψ(A) = (Σ_{j≤i} (Γ_{A_j} + L_j^⊥))_i` on `ℍ*₀`.
pub fn psi_of_maps(cfg: &FrameConfig, a: &[LinearMap]) -> Result<PartialFlag> {
    let graphs = a.iter().map(graph).collect::<Result<Vec<_>>>()?;
    let (n, f) = (cfg.n(), cfg.field());
    let spaces = (1..=cfg.k())
        .map(|i| sum_all(&graphs[..i], n, f).sum(&cfg.perp_sum(1..=i)))
        .collect::<Result<_>>()?;
    Ok(PartialFlag { spaces })
}

/// Counts of `𝒢`, `𝒢 ∩ U` and `Ĝ`.
pub fn enumerate_report(cfg: &FrameConfig, budget: u128) -> Result<EnumReport> {
    let mut report = EnumReport::new("wflag enumerate", cfg.report_config(budget));
    let gcal = enumerate_gcal(cfg, budget)?;
    let ghat = enumerate_ghat(cfg, budget)?;
    report.count("gcal", gcal.len() as u128);
    report.count("gcal_u", gcal.iter().filter(|p| in_u(cfg, p)).count() as u128);
    report.count("ghat", ghat.len() as u128);
    report.count("hstar0_dim", cfg.multi_index().hstar0_dim() as u128);
    report.check("gcal_points_valid", gcal.iter().all(|p| is_gcal(cfg, p)));
    report.check("ghat_points_valid", ghat.iter().all(|p| is_ghat(cfg, p)));
    Ok(report)
}

/// Lifts every point of `𝒢` and checks it is a section of [`pi_diag`].
pub fn lift_report(cfg: &FrameConfig, budget: u128) -> Result<EnumReport> {
    let mut report = EnumReport::new("wflag lift", cfg.report_config(budget));
    let gcal = enumerate_gcal(cfg, budget)?;
    let mut ok = true;
    let mut closed_form = true;
    for pt in &gcal {
        match lift_to_ghat(cfg, pt) {
            Ok(lift) if pi_diag(&lift) == *pt => {
                if in_u(cfg, pt) && closed_form_lift(cfg, pt)? != lift {
                    closed_form = false;
                }
            }
            _ => {
                ok = false;
                report.witness("lift_is_section", &pt.spaces.iter().collect::<Vec<_>>());
            }
        }
    }
    report.count("gcal", gcal.len() as u128);
    report.check("lift_is_section", ok);
    report.check("lift_matches_closed_form_over_u", closed_form);
    Ok(report)
}

/// `π: Ĝ → 𝒢` is surjective, bijective over `𝒢 ∩ U` with the closed-form
/// fiber, and has a larger fiber somewhere when `U` misses part of `𝒢`.
pub fn verify_mth(cfg: &FrameConfig, budget: u128) -> Result<EnumReport> {
    let mut report = EnumReport::new("wflag verify", cfg.report_config(budget));
    let q = cfg.field().p();
    let beta = cfg.multi_index();
    let gcal = enumerate_gcal(cfg, budget)?;
    let ghat = enumerate_ghat(cfg, budget)?;
    let gcal_set: BTreeSet<&GCalPoint> = gcal.iter().collect();

    let mut fibers: BTreeMap<GCalPoint, Vec<&GHatPoint>> = BTreeMap::new();
    let mut lands = true;
    for pt in &ghat {
        let image = pi_diag(pt);
        if !gcal_set.contains(&image) {
            lands = false;
        }
        fibers.entry(image).or_default().push(pt);
    }
    let u_points: Vec<&GCalPoint> = gcal.iter().filter(|p| in_u(cfg, p)).collect();
    let mut u_ok = true;
    for p in &u_points {
        let fiber = fibers.get(*p).map(Vec::as_slice).unwrap_or(&[]);
        if fiber.len() != 1 || *fiber[0] != closed_form_lift(cfg, p)? {
            u_ok = false;
            report.witness("fiber_over_u_is_closed_form", &p.spaces.iter().collect::<Vec<_>>());
        }
    }
    let lifts_ok = gcal
        .iter()
        .all(|p| lift_to_ghat(cfg, p).map(|l| pi_diag(&l) == *p).unwrap_or(false));

    report.count("gcal", gcal.len() as u128);
    report.count("gcal_u", u_points.len() as u128);
    report.count("ghat", ghat.len() as u128);
    report.count("hstar0_dim", beta.hstar0_dim() as u128);
    report.check("ghat_points_valid", ghat.iter().all(|p| is_ghat(cfg, p)));
    report.check("diag_lands_in_gcal", lands);
    report.check("pi_surjective", fibers.len() == gcal.len());
    report.check("lift_is_section", lifts_ok);
    report.check("fiber_over_u_is_closed_form", u_ok);
    report.check_with(
        "ghat_tower_count",
        ghat.len() as u128 == ghat_tower_count(beta, q),
        format!("{} vs {}", ghat.len(), ghat_tower_count(beta, q)),
    );
    report.check_with(
        "gcal_u_tower_count",
        u_points.len() as u128 == gcal_u_tower_count(beta, q),
        format!("{} vs {}", u_points.len(), gcal_u_tower_count(beta, q)),
    );

    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for f in fibers.values() {
        *histogram.entry(f.len()).or_default() += 1;
    }
    let census = histogram.iter().map(|(size, n)| format!("{n}x{size}")).join(", ");
    report.observe("fiber_census", census);
    if u_points.len() < gcal.len() {
        let big = fibers.iter().find(|(_, f)| f.len() > 1);
        if let Some((p, _)) = big {
            report.witness("nontrivial_fiber_exists", &p.spaces.iter().collect::<Vec<_>>());
        }
        report.check("nontrivial_fiber_exists", big.is_some());
    }

    let hstar0 = hstar0_points(cfg, budget)?;
    let mut nested = true;
    let mut in_u_ok = true;
    let mut psi_ok = true;
    let mut images = BTreeSet::new();
    for a in &hstar0 {
        let pt = compressed_point(cfg, a)?;
        nested &= graphs_nested(cfg, &pt);
        in_u_ok &= is_gcal(cfg, &pt) && in_u(cfg, &pt);
        psi_ok &= psi_tilde(cfg, &pt)? == psi_of_maps(cfg, a)?;
        images.insert(pt);
    }
    report.count("hstar0", hstar0.len() as u128);
    report.check("compressed_graphs_nested", nested);
    report.check("hstar0_lands_in_gcal_u", in_u_ok);
    report.check("hstar0_embeds", images.len() == hstar0.len());
    report.check("psi_tilde_extends_psi", psi_ok);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Fp;
    use crate::grassfib::make_frame;
    use crate::report::DEFAULT_BUDGET as B;

    fn cfg(n: usize, beta: &[usize], p: u32) -> FrameConfig {
        make_frame(n, Fp::new(p).unwrap(), beta, None).unwrap()
    }

    #[test]
    fn k1_is_a_grassmannian_of_lines() {
        let c = cfg(4, &[2], 2);
        assert_eq!(enumerate_gcal(&c, B).unwrap().len(), 7);
        assert_eq!(enumerate_ghat(&c, B).unwrap().len(), 7);
        let r = verify_mth(&c, B).unwrap();
        assert!(r.passed(), "{:?}", r.failed_checks());
    }

    #[test]
    fn zero_point() {
        let c = cfg(5, &[1, 3, 5], 3);
        let zero = GCalPoint {
            spaces: (1..=3).map(|i| c.line_sum(1..=i)).collect(),
        };
        assert!(is_gcal(&c, &zero));
        assert!(in_u(&c, &zero));
        assert_eq!(psi_tilde(&c, &zero).unwrap(), PartialFlag::standard(&c));
        let lift = lift_to_ghat(&c, &zero).unwrap();
        for i in 1..=3 {
            for j in 1..=i {
                assert_eq!(lift.get(j, i), &c.line_sum(1..=j));
            }
        }
    }

    #[test]
    fn compress_k2_unfolds() {
        let c = cfg(5, &[2, 4], 3);
        for a in hstar0_points(&c, B).unwrap().iter().step_by(7) {
            let b = compress_maps(&c, a).unwrap();
            assert_eq!(b[0].domain(), a[0].domain());
            let u1 = c.line(1).basis_rows().next().unwrap().to_vec();
            let u2 = c.line(2).basis_rows().next().unwrap().to_vec();
            assert_eq!(b[0].apply(&u1).unwrap(), a[0].apply(&u1).unwrap());
            let dropped = project(&a[0].apply(&u1).unwrap(), c.perp(3), c.perp(2)).unwrap();
            assert_eq!(b[1].apply(&u1).unwrap(), dropped);
            assert_eq!(b[1].apply(&u2).unwrap(), a[1].apply(&u2).unwrap());
        }
    }

    #[test]
    fn verify_small_configs() {
        for (n, beta) in [(4, vec![2, 4]), (4, vec![1, 3]), (5, vec![2, 4])] {
            let r = verify_mth(&cfg(n, &beta, 2), B).unwrap();
            assert!(r.passed(), "{n} {beta:?}: {:?}", r.failed_checks());
        }
    }

    #[test]
    fn multi_point_fiber_for_n5_beta13() {
        let c = cfg(5, &[1, 3], 2);
        let r = verify_mth(&c, B).unwrap();
        assert!(r.passed(), "{:?}", r.failed_checks());
        assert!(r.counts["gcal_u"] < r.counts["gcal"]);
        assert!(r.checks.iter().any(|c| c.name == "nontrivial_fiber_exists"));
    }
}

//! Kempf-Laksov chains over a partial flag, the family of such chains over
//! `Ĝ`, and its map to `Gr_k(E)` as an embedded resolution of `V̄_β`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::exactlin::{graph, project, q_integer, LinearMap, Subspace};
use crate::grassfib::{grassmannian, satisfies, FrameConfig, MultiIndex, SchubertFilter};
use crate::report::{check_budget, EnumReport};
use crate::wflag::{
    enumerate_ghat, hstar0_points, hstar0_target, lift_to_ghat, pi_diag, psi_of_maps, psi_tilde,
    GCalPoint, GHatPoint, PartialFlag,
};

/// `V_1 ⊂ … ⊂ V_k` with `dim V_i = i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KlPoint {
    pub spaces: Vec<Subspace>,
}

impl KlPoint {
    pub fn top(&self) -> &Subspace {
        self.spaces.last().unwrap()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EmbResPoint {
    pub ghat: GHatPoint,
    pub kl: KlPoint,
}

/// `Π [β_i - i + 1]_q`, the number of chains over any flag of type `β`.
pub fn kl_count(beta: &MultiIndex, q: u32) -> u128 {
    (1..=beta.k()).map(|i| q_integer(beta.at(i) - i + 1, q)).product()
}

/// Chains `V_1 ⊂ … ⊂ V_k` with `V_i ⊆ W_i` for the flag `W_*`.
pub fn kl_points(flag: &PartialFlag, budget: u128) -> Result<Vec<KlPoint>> {
    let first = flag.spaces.first().ok_or(Error::BadDimension { dim: 0, available: 0 })?;
    let q = first.field().p();
    let estimate = flag
        .spaces
        .iter()
        .enumerate()
        .map(|(i, w)| q_integer((w.dim() + 1).saturating_sub(i + 1), q))
        .fold(1u128, |a, b| a.saturating_mul(b));
    check_budget(estimate, budget)?;
    let mut out = Vec::new();
    let mut chain = Vec::new();
    kl_from(flag, &mut chain, &mut out)?;
    Ok(out)
}

fn kl_from(flag: &PartialFlag, chain: &mut Vec<Subspace>, out: &mut Vec<KlPoint>) -> Result<()> {
    let i = chain.len();
    if i == flag.spaces.len() {
        out.push(KlPoint { spaces: chain.clone() });
        return Ok(());
    }
    let upper = &flag.spaces[i];
    let lower = match chain.last() {
        Some(l) => l.clone(),
        None => Subspace::zero(upper.ambient_dim(), upper.field()),
    };
    for next in upper.subspaces_containing(&lower, i + 1)? {
        chain.push(next);
        kl_from(flag, chain, out)?;
        chain.pop();
    }
    Ok(())
}

/// `Ψ(A) = (Σ_{j≤i} (Γ_{A_j} + L_j^⊥))_i`, checked to have dimensions `β_i`.
pub fn psi_embed(cfg: &FrameConfig, a: &[LinearMap]) -> Result<PartialFlag> {
    let flag = psi_of_maps(cfg, a)?;
    for (i, w) in flag.spaces.iter().enumerate() {
        let want = cfg.multi_index().at(i + 1);
        if w.dim() != want {
            return Err(Error::BadDimension { dim: w.dim(), available: want });
        }
    }
    Ok(flag)
}

/// `Ψ̂ = Ψ̃ ∘ π`.
pub fn psi_hat(cfg: &FrameConfig, pt: &GHatPoint) -> Result<PartialFlag> {
    psi_tilde(cfg, &pi_diag(pt))
}

/// The chart `W = {L : L ∩ Σ_{i=1}^{k+1} L_i^⊥ = 0}`.
pub fn in_chart(cfg: &FrameConfig, l: &Subspace) -> bool {
    l.intersect(&cfg.perp_sum(1..=cfg.k() + 1)).unwrap().is_zero()
}

/// The point of `Ĝ` over `(L_1, L_1 + L_2, …)`.
pub fn special_point(cfg: &FrameConfig) -> Result<GHatPoint> {
    let zero = GCalPoint {
        spaces: (1..=cfg.k()).map(|i| cfg.line_sum(1..=i)).collect(),
    };
    lift_to_ghat(cfg, &zero)
}

/// Every pair of a point of `Ĝ` and a chain over its flag.
pub fn enumerate_embres(cfg: &FrameConfig, budget: u128) -> Result<Vec<EmbResPoint>> {
    let q = cfg.field().p();
    let beta = cfg.multi_index();
    check_budget(
        crate::wflag::ghat_tower_count(beta, q).saturating_mul(kl_count(beta, q)),
        budget,
    )?;
    let mut out = Vec::new();
    for ghat in enumerate_ghat(cfg, budget)? {
        let flag = psi_hat(cfg, &ghat)?;
        for kl in kl_points(&flag, budget)? {
            out.push(EmbResPoint {
                ghat: ghat.clone(),
                kl,
            });
        }
    }
    Ok(out)
}

/// `V_β^∘` for the flag adapted to the chosen lines: `dim L ∩ F_{β_i} = i`
/// and `dim L ∩ (Σ_{j<i} L_j + Σ_{j≤i} L_j^⊥) = i - 1`.
pub fn cell_points(cfg: &FrameConfig, budget: u128) -> Result<Vec<Subspace>> {
    let below: Vec<Subspace> = (1..=cfg.k()).map(|i| cfg.node_below(i)).collect();
    Ok(grassmannian(cfg, budget)?
        .into_iter()
        .filter(|l| {
            (1..=cfg.k()).all(|i| {
                l.intersect(cfg.f_node(i)).unwrap().dim() == i
                    && l.intersect(&below[i - 1]).unwrap().dim() == i - 1
            })
        })
        .collect())
}

/// Reconstructs `(A_*, V_*)` over a chart point `Γ_T`:
/// `A_i` is `T|_{L_i}` projected onto `Σ_{j>i} L_j^⊥` and `V_i = Γ_T ∩ Ψ(A)_i`.
pub fn reconstruct_chart_point(cfg: &FrameConfig, t: &LinearMap) -> Result<(Vec<LinearMap>, KlPoint)> {
    let k = cfg.k();
    let gamma = graph(t)?;
    let a = (1..=k)
        .map(|i| {
            let u = cfg.line(i).basis_rows().next().unwrap().to_vec();
            let image = project(&t.apply(&u)?, &hstar0_target(cfg, i), &cfg.perp_sum(1..=i))?;
            LinearMap::from_pairs(cfg.line(i).clone(), hstar0_target(cfg, i), &[(u, image)])
        })
        .collect::<Result<Vec<_>>>()?;
    let flag = psi_embed(cfg, &a)?;
    let spaces = flag
        .spaces
        .iter()
        .map(|w| gamma.intersect(w))
        .collect::<Result<Vec<_>>>()?;
    Ok((a, KlPoint { spaces }))
}

fn valid_chain(flag: &PartialFlag, kl: &KlPoint) -> bool {
    kl.spaces.len() == flag.spaces.len()
        && kl.spaces.iter().enumerate().all(|(i, v)| {
            v.dim() == i + 1
                && flag.spaces[i].contains(v).unwrap_or(false)
                && (i == 0 || v.contains(&kl.spaces[i - 1]).unwrap_or(false))
        })
}

/// Every chart point is the top of a chain over exactly one flag `Ψ(A)`,
/// recovered by the projection formula; over `Ψ(0)` the chains are the
/// Kempf-Laksov resolution of `V̄_β`.
pub fn verify_thm41(cfg: &FrameConfig, budget: u128) -> Result<EnumReport> {
    let mut report = EnumReport::new("embres verify-chart", cfg.report_config(budget));
    let k = cfg.k();
    let q = cfg.field().p();
    let domain = cfg.line_sum(1..=k);
    let target = cfg.perp_sum(1..=k + 1);
    check_budget((q as u128).saturating_pow((domain.dim() * target.dim()) as u32), budget)?;
    let hstar0 = hstar0_points(cfg, budget)?;
    let flags = hstar0
        .iter()
        .map(|a| psi_embed(cfg, a))
        .collect::<Result<Vec<_>>>()?;
    let distinct: BTreeSet<&PartialFlag> = flags.iter().collect();

    let maps = LinearMap::enumerate(&domain, &target);
    let mut reconstructed = true;
    let mut unique = true;
    for t in &maps {
        let gamma = graph(t)?;
        let (a, kl) = reconstruct_chart_point(cfg, t)?;
        let flag = psi_embed(cfg, &a)?;
        if !valid_chain(&flag, &kl) || kl.top() != &gamma {
            reconstructed = false;
            report.witness("chart_reconstruction", &[&gamma]);
        }
        let holders = flags
            .iter()
            .filter(|w| {
                w.spaces
                    .iter()
                    .enumerate()
                    .all(|(i, wi)| gamma.intersect(wi).unwrap().dim() > i)
            })
            .count();
        if holders != 1 {
            unique = false;
            report.witness("unique_flag", &[&gamma]);
        }
    }

    let zero_flag = PartialFlag::standard(cfg);
    let over_zero: BTreeSet<Subspace> = kl_points(&zero_flag, budget)?
        .into_iter()
        .map(|p| p.top().clone())
        .collect();
    let closed: BTreeSet<Subspace> = grassmannian(cfg, budget)?
        .into_iter()
        .filter(|l| satisfies(cfg, l, SchubertFilter::Closed))
        .collect();

    report.count("chart_points", maps.len() as u128);
    report.count("hstar0", hstar0.len() as u128);
    report.count("closed_schubert", closed.len() as u128);
    report.check("psi_injective", distinct.len() == hstar0.len());
    report.check("psi_of_zero_is_standard", psi_embed(cfg, &zero_maps(cfg))? == zero_flag);
    report.check("chart_reconstruction", reconstructed);
    report.check("unique_flag", unique);
    report.check("kl_over_zero_onto_closed_schubert", over_zero == closed);
    Ok(report)
}

fn zero_maps(cfg: &FrameConfig) -> Vec<LinearMap> {
    (1..=cfg.k())
        .map(|i| LinearMap::zero(cfg.line(i).clone(), hstar0_target(cfg, i)))
        .collect()
}

/// Counts and invariants of the fiber product.
pub fn enumerate_report(cfg: &FrameConfig, budget: u128) -> Result<EnumReport> {
    let mut report = EnumReport::new("embres enumerate", cfg.report_config(budget));
    let q = cfg.field().p();
    let points = enumerate_embres(cfg, budget)?;
    let ghat = enumerate_ghat(cfg, budget)?.len() as u128;
    let kl = kl_count(cfg.multi_index(), q);
    report.count("embres", points.len() as u128);
    report.count("ghat", ghat);
    report.count("kl_fiber", kl);
    report.check("count_is_ghat_times_kl", points.len() as u128 == ghat * kl);
    let incident = points.iter().all(|pt| incidence_holds(cfg, pt));
    report.check("incidence", incident);
    Ok(report)
}

/// `V_i ⊆ ℓ_i^i + Σ_{j≤i} L_j^⊥`, and `dim(V_k ∩ (ℓ_i^i + Σ_{j≤i} L_j^⊥)) ≥ i`
/// with equality forcing `V_i` to be that intersection.
fn incidence_holds(cfg: &FrameConfig, pt: &EmbResPoint) -> bool {
    let top = pt.kl.top();
    (1..=cfg.k()).all(|i| {
        let w = pt.ghat.get(i, i).sum(&cfg.perp_sum(1..=i)).unwrap();
        let meet = top.intersect(&w).unwrap();
        w.contains(&pt.kl.spaces[i - 1]).unwrap()
            && meet.dim() >= i
            && (meet.dim() > i || meet == pt.kl.spaces[i - 1])
    })
}

/// The map `(ℓ_*^*, V_*) ↦ V_k` is onto `Gr_k(E)`, one-to-one over the chart,
/// and over the cell factors through the special point.
pub fn verify_mth2(cfg: &FrameConfig, budget: u128) -> Result<EnumReport> {
    let mut report = EnumReport::new("embres verify", cfg.report_config(budget));
    let q = cfg.field().p();
    let beta = cfg.multi_index();
    let points = enumerate_embres(cfg, budget)?;
    let all = grassmannian(cfg, budget)?;
    let mut preimages: BTreeMap<&Subspace, Vec<&EmbResPoint>> = BTreeMap::new();
    for pt in &points {
        preimages.entry(pt.kl.top()).or_default().push(pt);
    }

    let o = special_point(cfg)?;
    let cell = cell_points(cfg, budget)?;
    let chart: Vec<&Subspace> = all.iter().filter(|l| in_chart(cfg, l)).collect();
    let closed: BTreeSet<&Subspace> = all
        .iter()
        .filter(|l| satisfies(cfg, l, SchubertFilter::Closed))
        .collect();
    let chart_in_closed: BTreeSet<&Subspace> = chart.iter().copied().filter(|l| closed.contains(l)).collect();
    let cell_set: BTreeSet<&Subspace> = cell.iter().collect();

    let chart_unique = chart
        .iter()
        .all(|l| preimages.get(l).map_or(0, Vec::len) == 1);
    let cell_over_o = cell
        .iter()
        .all(|l| preimages.get(l).is_some_and(|ps| ps.iter().all(|p| p.ghat == o)));
    let over_o: BTreeSet<&KlPoint> = points.iter().filter(|p| p.ghat == o).map(|p| &p.kl).collect();
    let standard = PartialFlag::standard(cfg);
    let kl_standard = kl_points(&standard, budget)?;
    let tops_over_o: BTreeSet<&Subspace> = over_o.iter().map(|p| p.top()).collect();

    report.count("embres", points.len() as u128);
    report.count("grassmannian", all.len() as u128);
    report.count("image", preimages.len() as u128);
    report.count("chart", chart.len() as u128);
    report.count("cell", cell.len() as u128);
    report.count("closed_schubert", closed.len() as u128);
    report.check("incidence", points.iter().all(|p| incidence_holds(cfg, p)));
    report.check_with(
        "surjective_onto_grassmannian",
        preimages.len() == all.len(),
        "empirical at this field size",
    );
    report.check("chart_count", chart.len() as u128 == (q as u128).pow((beta.k() * (beta.n() - beta.k())) as u32));
    report.check("chart_preimages_unique", chart_unique);
    report.check("special_point_flag_is_standard", psi_hat(cfg, &o)? == standard);
    report.check(
        "cell_count",
        cell.len() as u128 == (q as u128).pow(beta.cell_dim() as u32),
    );
    report.check("cell_is_chart_part_of_closed", cell_set == chart_in_closed);
    report.check("cell_preimage_over_special_point", cell_over_o);
    report.check(
        "fiber_over_special_point_is_kl",
        over_o == kl_standard.iter().collect::<BTreeSet<_>>(),
    );
    report.check("fiber_over_special_point_onto_closed", tops_over_o == closed);
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
    fn kl_line_count() {
        let c = cfg(5, &[3], 2);
        assert_eq!(kl_points(&PartialFlag::standard(&c), B).unwrap().len(), 7);
        let c = cfg(4, &[2, 4], 3);
        let n = kl_points(&PartialFlag::standard(&c), B).unwrap().len() as u128;
        assert_eq!(n, kl_count(c.multi_index(), 3));
    }

    #[test]
    fn zero_chart_point() {
        let c = cfg(4, &[2, 4], 2);
        let t = LinearMap::zero(c.line_sum(1..=2), c.perp_sum(1..=3));
        let (a, kl) = reconstruct_chart_point(&c, &t).unwrap();
        assert!(a.iter().all(LinearMap::is_zero));
        assert_eq!(kl.spaces, vec![c.line_sum(1..=1), c.line_sum(1..=2)]);
        assert!(in_chart(&c, &c.base_point()));
    }

    #[test]
    fn theorems_small() {
        for beta in [vec![2, 4], vec![1, 3]] {
            let c = cfg(4, &beta, 2);
            let r = verify_thm41(&c, B).unwrap();
            assert!(r.passed(), "{beta:?}: {:?}", r.failed_checks());
            let r = verify_mth2(&c, B).unwrap();
            assert!(r.passed(), "{beta:?}: {:?}", r.failed_checks());
            let r = enumerate_report(&c, B).unwrap();
            assert!(r.passed(), "{beta:?}: {:?}", r.failed_checks());
        }
    }

    #[test]
    fn k1_smoke() {
        let r = verify_mth2(&cfg(3, &[2], 2), B).unwrap();
        assert!(r.passed(), "{:?}", r.failed_checks());
    }
}

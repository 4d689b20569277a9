//! Schubert cells and varieties in the Grassmannian, parametrized by
//! products of projective spaces and bundles of linear maps whose graphs
//! sum to a point of `Gr_k(E)`.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::biflag::{standard_frames, Frames};
use crate::error::{Error, Result};
use crate::exactlin::{canonical_complement, gaussian_binomial, graph, q_integer, sum_all, Fp, LinearMap, Subspace, Vector};
use crate::report::{check_budget, EnumReport, ReportConfig};

/// `1 ≤ β_1 < … < β_k ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    n: usize,
    beta: Vec<usize>,
}

impl MultiIndex {
    pub fn new(n: usize, beta: Vec<usize>) -> Result<Self> {
        if beta.is_empty() {
            return Err(Error::InvalidMultiIndex("empty multi-index".into()));
        }
        if beta[0] == 0 || *beta.last().unwrap() > n {
            return Err(Error::InvalidMultiIndex(format!("{beta:?} not within 1..={n}")));
        }
        if beta.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidMultiIndex(format!("{beta:?} not strictly increasing")));
        }
        Ok(MultiIndex { n, beta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.beta.len()
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    /// `β_i` for `i` in `0..=k`, with `β_0 = 0`.
    pub fn at(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.beta[i - 1]
        }
    }

    /// Dimension `Σ (β_i - i)` of the Schubert cell.
    pub fn cell_dim(&self) -> usize {
        (1..=self.k()).map(|i| self.at(i) - i).sum()
    }

    /// Fiber dimension of `ℍ` over `ℙ`.
    pub fn h_rank(&self) -> usize {
        (2..=self.k()).map(|i| self.at(i - 1) - (i - 1)).sum()
    }

    /// Fiber dimension of `ℍ*` over `ℙ`.
    pub fn hstar_rank(&self) -> usize {
        let k = self.k();
        (1..=k).map(|i| self.n - self.at(i) - (k - i)).sum()
    }

    /// Dimension of `ℍ*₀`: `k(n - β_k) + Σ_{i<k} i(β_{i+1} - β_i - 1)`.
    pub fn hstar0_dim(&self) -> usize {
        let k = self.k();
        k * (self.n - self.at(k)) + (1..k).map(|i| i * (self.at(i + 1) - self.at(i) - 1)).sum::<usize>()
    }

    /// Number of points of `ℙ = Π ℙ(F_{β_i}^{β_{i-1}})` over `GF(q)`.
    pub fn p_count(&self, q: u32) -> u128 {
        (1..=self.k()).map(|i| q_integer(self.at(i) - self.at(i - 1), q)).product()
    }
}

/// Standard frames, the windows `F_{β_i} ∩ G^{β_{i-1}}`, and fixed lines
/// `L_i` with complements `L_i^⊥` in their windows.
#[derive(Clone, Debug)]
pub struct FrameConfig {
    beta: MultiIndex,
    field: Fp,
    frames: Frames,
    windows: Vec<Subspace>,
    lines: Vec<Subspace>,
    /// `L_1^⊥, …, L_k^⊥, G^{β_k}`.
    perps: Vec<Subspace>,
}

/// Builds a frame configuration. Without `line_choices` the lines are
/// `L_i = span(e_{β_{i-1}+1})`; complements are canonical in the window.
pub fn make_frame(
    n: usize,
    field: Fp,
    beta: &[usize],
    line_choices: Option<&[Vector]>,
) -> Result<FrameConfig> {
    let beta = MultiIndex::new(n, beta.to_vec())?;
    let k = beta.k();
    let frames = standard_frames(n, field);
    let windows: Vec<Subspace> = (1..=k)
        .map(|i| Subspace::coordinate(n, field, beta.at(i - 1)..beta.at(i)))
        .collect();
    let lines: Vec<Subspace> = match line_choices {
        None => (1..=k)
            .map(|i| Subspace::coordinate(n, field, [beta.at(i - 1)]))
            .collect(),
        Some(vs) => {
            if vs.len() != k {
                return Err(Error::InvalidLine(format!("{} lines for k = {k}", vs.len())));
            }
            vs.iter()
                .zip(&windows)
                .enumerate()
                .map(|(i, (v, win))| {
                    let l = Subspace::span(&[v], n, field)?;
                    if l.dim() != 1 || !win.contains(&l)? {
                        return Err(Error::InvalidLine(format!("L_{} = {l:?} not a line in its window", i + 1)));
                    }
                    Ok(l)
                })
                .collect::<Result<_>>()?
        }
    };
    let mut perps = lines
        .iter()
        .zip(&windows)
        .map(|(l, win)| canonical_complement(l, win))
        .collect::<Result<Vec<_>>>()?;
    perps.push(frames.g[beta.at(k)].clone());
    let cfg = FrameConfig {
        beta,
        field,
        frames,
        windows,
        lines,
        perps,
    };
    let all = sum_all(cfg.lines.iter().chain(&cfg.perps), n, field);
    debug_assert_eq!(all.dim(), n);
    Ok(cfg)
}

impl FrameConfig {
    pub fn n(&self) -> usize {
        self.beta.n()
    }

    pub fn k(&self) -> usize {
        self.beta.k()
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn multi_index(&self) -> &MultiIndex {
        &self.beta
    }

    pub fn frames(&self) -> &Frames {
        &self.frames
    }

    /// `F_{β_i}`, `i` in `0..=k`.
    pub fn f_node(&self, i: usize) -> &Subspace {
        &self.frames.f[self.beta.at(i)]
    }

    /// `G^{β_i}`, `i` in `0..=k`.
    pub fn g_node(&self, i: usize) -> &Subspace {
        &self.frames.g[self.beta.at(i)]
    }

    /// Window `F_{β_i}^{β_{i-1}}`, `i` in `1..=k`.
    pub fn window(&self, i: usize) -> &Subspace {
        &self.windows[i - 1]
    }

    /// `L_i`, `i` in `1..=k`.
    pub fn line(&self, i: usize) -> &Subspace {
        &self.lines[i - 1]
    }

    /// `L_i^⊥`, `i` in `1..=k+1`.
    pub fn perp(&self, i: usize) -> &Subspace {
        &self.perps[i - 1]
    }

    /// `Σ_{p ∈ range} L_p`.
    pub fn line_sum(&self, range: impl IntoIterator<Item = usize>) -> Subspace {
        let spaces: Vec<&Subspace> = range.into_iter().map(|p| self.line(p)).collect();
        sum_all(spaces, self.n(), self.field)
    }

    /// `Σ_{p ∈ range} L_p^⊥`.
    pub fn perp_sum(&self, range: impl IntoIterator<Item = usize>) -> Subspace {
        let spaces: Vec<&Subspace> = range.into_iter().map(|p| self.perp(p)).collect();
        sum_all(spaces, self.n(), self.field)
    }

    /// `V_j^i = Σ_{p≤j} L_p + Σ_{p=i+1}^{k+1} L_p^⊥`.
    pub fn v(&self, j: usize, i: usize) -> Subspace {
        self.line_sum(1..=j).sum(&self.perp_sum(i + 1..=self.k() + 1)).unwrap()
    }

    /// `Σ_{j<i} L_j + Σ_{j≤i} L_j^⊥`, the space playing the role of
    /// `F_{β_i - 1}` for the flag adapted to the chosen lines.
    pub fn node_below(&self, i: usize) -> Subspace {
        self.line_sum(1..i).sum(&self.perp_sum(1..=i)).unwrap()
    }

    /// `Σ L_i`.
    pub fn base_point(&self) -> Subspace {
        self.line_sum(1..=self.k())
    }

    pub fn report_config(&self, budget: u128) -> ReportConfig {
        ReportConfig {
            n: Some(self.n()),
            k: Some(self.k()),
            beta: Some(self.beta.beta().to_vec()),
            field: Some(self.field.p()),
            budget: Some(budget),
            ..ReportConfig::default()
        }
    }

    /// All lines of each window.
    pub fn window_lines(&self) -> Vec<Vec<Subspace>> {
        self.windows.iter().map(|w| w.subspaces(1).unwrap()).collect()
    }
}

/// Moving lines `ℓ_i` in the windows and maps `A_i` defined on them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphTuple {
    pub lines: Vec<Subspace>,
    pub maps: Vec<LinearMap>,
}

/// Which bundle a tuple lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bundle {
    /// `A_i ∈ Hom(ℓ_i, Σ_{j<i} ℓ_j^⊥)`.
    H,
    /// `A_i ∈ Hom(ℓ_i, Σ_{j>i} ℓ_j^⊥)`, with `ℓ_{k+1}^⊥ = G^{β_k}`.
    HStar,
}

/// Targets of the maps `A_i` over the moving lines.
pub fn map_targets(cfg: &FrameConfig, lines: &[Subspace], bundle: Bundle) -> Result<Vec<Subspace>> {
    let k = cfg.k();
    let mut perps = lines
        .iter()
        .enumerate()
        .map(|(i, l)| canonical_complement(l, cfg.window(i + 1)))
        .collect::<Result<Vec<_>>>()?;
    perps.push(cfg.perp(k + 1).clone());
    Ok((1..=k)
        .map(|i| {
            let range = match bundle {
                Bundle::H => 0..i - 1,
                Bundle::HStar => i..k + 1,
            };
            sum_all(&perps[range], cfg.n(), cfg.field())
        })
        .collect())
}

fn check_tuple(cfg: &FrameConfig, t: &GraphTuple, bundle: Bundle) -> Result<Vec<Subspace>> {
    let k = cfg.k();
    if t.lines.len() != k || t.maps.len() != k {
        return Err(Error::MapType(format!("expected {k} lines and {k} maps")));
    }
    for (i, l) in t.lines.iter().enumerate() {
        if l.dim() != 1 || !cfg.window(i + 1).contains(l)? {
            return Err(Error::InvalidLine(format!("ℓ_{} = {l:?} not a line in its window", i + 1)));
        }
    }
    let targets = map_targets(cfg, &t.lines, bundle)?;
    for (i, (a, target)) in t.maps.iter().zip(&targets).enumerate() {
        if a.domain() != &t.lines[i] || a.target() != target {
            return Err(Error::MapType(format!("A_{} has the wrong domain or target", i + 1)));
        }
    }
    t.maps.iter().map(graph).collect()
}

/// `Σ Γ_{A_i}` for a point of `ℍ`; checks `L ∩ F_{β_i} = Σ_{j≤i} Γ_{A_j}`
/// of dimension `i`.
pub fn phi(cfg: &FrameConfig, t: &GraphTuple) -> Result<Subspace> {
    let graphs = check_tuple(cfg, t, Bundle::H)?;
    let (n, f) = (cfg.n(), cfg.field());
    let l = sum_all(&graphs, n, f);
    for i in 0..=cfg.k() {
        let partial = sum_all(&graphs[..i], n, f);
        if partial.dim() != i || l.intersect(cfg.f_node(i))? != partial {
            return Err(Error::NotOnVariety(format!("Φ image {l:?} fails at F_{}", cfg.multi_index().at(i))));
        }
    }
    Ok(l)
}

/// `Σ Γ_{A_i}` for a point of `ℍ*`; checks `L ∩ G^{β_i} = Σ_{j>i} Γ_{A_j}`
/// of dimension `k - i`.
pub fn phi_star(cfg: &FrameConfig, t: &GraphTuple) -> Result<Subspace> {
    let graphs = check_tuple(cfg, t, Bundle::HStar)?;
    let (n, f, k) = (cfg.n(), cfg.field(), cfg.k());
    let l = sum_all(&graphs, n, f);
    for i in 0..=k {
        let partial = sum_all(&graphs[i..], n, f);
        if partial.dim() != k - i || l.intersect(cfg.g_node(i))? != partial {
            return Err(Error::NotOnVariety(format!("Φ* image {l:?} fails at G^{}", cfg.multi_index().at(i))));
        }
    }
    Ok(l)
}

/// `L ↦ (P(L ∩ F_{β_i}))_i`, projecting into each window along
/// `F_{β_{i-1}}`.
pub fn project_to_p(cfg: &FrameConfig, l: &Subspace) -> Result<Vec<Subspace>> {
    (1..=cfg.k())
        .map(|i| l.intersect(cfg.f_node(i))?.project(cfg.window(i), cfg.f_node(i - 1)))
        .collect()
}

/// `L ↦ (P(L ∩ G^{β_{i-1}}))_i`, projecting into each window along
/// `G^{β_i}`.
pub fn project_star_to_p(cfg: &FrameConfig, l: &Subspace) -> Result<Vec<Subspace>> {
    (1..=cfg.k())
        .map(|i| l.intersect(cfg.g_node(i - 1))?.project(cfg.window(i), cfg.g_node(i)))
        .collect()
}

/// Every point of `ℍ` or `ℍ*` over every point of `ℙ`.
pub fn enumerate_tuples(cfg: &FrameConfig, bundle: Bundle, budget: u128) -> Result<Vec<GraphTuple>> {
    let q = cfg.field().p();
    let rank = match bundle {
        Bundle::H => cfg.multi_index().h_rank(),
        Bundle::HStar => cfg.multi_index().hstar_rank(),
    };
    let estimate = cfg
        .multi_index()
        .p_count(q)
        .saturating_mul((q as u128).saturating_pow(rank as u32));
    check_budget(estimate, budget)?;
    let mut out = Vec::new();
    for lines in cfg.window_lines().into_iter().multi_cartesian_product() {
        let targets = map_targets(cfg, &lines, bundle)?;
        let choices: Vec<Vec<LinearMap>> = lines
            .iter()
            .zip(&targets)
            .map(|(l, t)| LinearMap::enumerate(l, t))
            .collect();
        for maps in choices.into_iter().multi_cartesian_product() {
            out.push(GraphTuple {
                lines: lines.clone(),
                maps,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchubertFilter {
    /// `V_β^∘`: `dim L ∩ F_{β_i} = i` and `dim L ∩ F_{β_i - 1} = i - 1`.
    Cell,
    /// `V_β`: `dim L ∩ F_{β_i} = i`.
    Open,
    /// `V̄_β`: `dim L ∩ F_{β_i} ≥ i`.
    Closed,
    /// `V*_β`: `dim L ∩ G^{β_i} = k - i`.
    StarOpen,
    /// `V̄*_β`: `dim L ∩ G^{β_i} ≥ k - i`.
    StarClosed,
}

impl std::str::FromStr for SchubertFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cell" => SchubertFilter::Cell,
            "open" => SchubertFilter::Open,
            "closed" => SchubertFilter::Closed,
            "star_open" => SchubertFilter::StarOpen,
            "star_closed" => SchubertFilter::StarClosed,
            other => return Err(Error::InvalidMultiIndex(format!("unknown mode {other}"))),
        })
    }
}

pub fn satisfies(cfg: &FrameConfig, l: &Subspace, mode: SchubertFilter) -> bool {
    let k = cfg.k();
    let b = cfg.multi_index();
    let dim_f = |j: usize| l.intersect(&cfg.frames.f[j]).unwrap().dim();
    let dim_g = |i: usize| l.intersect(cfg.g_node(i)).unwrap().dim();
    match mode {
        SchubertFilter::Cell => (1..=k).all(|i| dim_f(b.at(i)) == i && dim_f(b.at(i) - 1) == i - 1),
        SchubertFilter::Open => (1..=k).all(|i| dim_f(b.at(i)) == i),
        SchubertFilter::Closed => (1..=k).all(|i| dim_f(b.at(i)) >= i),
        SchubertFilter::StarOpen => (0..=k).all(|i| dim_g(i) == k - i),
        SchubertFilter::StarClosed => (0..=k).all(|i| dim_g(i) >= k - i),
    }
}

/// Brute force over `Gr_k(GF(p)^n)` with a rank filter.
pub fn vbeta_points(cfg: &FrameConfig, mode: SchubertFilter, budget: u128) -> Result<Vec<Subspace>> {
    grassmannian(cfg, budget).map(|all| all.into_iter().filter(|l| satisfies(cfg, l, mode)).collect())
}

/// All of `Gr_k(GF(p)^n)`, sorted.
pub fn grassmannian(cfg: &FrameConfig, budget: u128) -> Result<Vec<Subspace>> {
    check_budget(gaussian_binomial(cfg.n(), cfg.k(), cfg.field().p()), budget)?;
    Subspace::full(cfg.n(), cfg.field()).subspaces(cfg.k())
}

fn verify_graph_sum(cfg: &FrameConfig, bundle: Bundle, budget: u128) -> Result<EnumReport> {
    let (command, mode, rank) = match bundle {
        Bundle::H => ("grass verify-phi", SchubertFilter::Open, cfg.multi_index().h_rank()),
        Bundle::HStar => ("grass verify-phistar", SchubertFilter::StarOpen, cfg.multi_index().hstar_rank()),
    };
    let mut report = EnumReport::new(command, cfg.report_config(budget));
    let tuples = enumerate_tuples(cfg, bundle, budget)?;
    let target: BTreeSet<Subspace> = vbeta_points(cfg, mode, budget)?.into_iter().collect();
    let mut image = BTreeSet::new();
    let mut per_call = true;
    let mut recovers = true;
    for t in &tuples {
        let l = match bundle {
            Bundle::H => phi(cfg, t),
            Bundle::HStar => phi_star(cfg, t),
        };
        let l = match l {
            Ok(l) => l,
            Err(_) => {
                per_call = false;
                report.witness("per_call_rank_conditions", &t.lines.iter().collect::<Vec<_>>());
                continue;
            }
        };
        let back = match bundle {
            Bundle::H => project_to_p(cfg, &l)?,
            Bundle::HStar => project_star_to_p(cfg, &l)?,
        };
        if back != t.lines {
            recovers = false;
            report.witness("projection_recovers_lines", &[&l]);
        }
        image.insert(l);
    }
    let q = cfg.field().p();
    let expected = cfg.multi_index().p_count(q) * (q as u128).pow(rank as u32);
    report.count("inputs", tuples.len() as u128);
    report.count("image", image.len() as u128);
    report.count("vbeta", target.len() as u128);
    report.count("p_points", cfg.multi_index().p_count(q));
    report.check("per_call_rank_conditions", per_call);
    report.check("projection_recovers_lines", recovers);
    report.check("injective", image.len() == tuples.len());
    report.check("image_equals_vbeta", image == target);
    report.check_with(
        "count_identity",
        target.len() as u128 == expected,
        format!("{} vs |ℙ|·p^{rank} = {expected}", target.len()),
    );
    Ok(report)
}

/// `Φ: ℍ → Gr_k(E)` is injective with image `V_β`, compatible with the
/// projections to `ℙ`.
pub fn verify_phi(cfg: &FrameConfig, budget: u128) -> Result<EnumReport> {
    verify_graph_sum(cfg, Bundle::H, budget)
}

/// `Φ*: ℍ* → Gr_k(E)` is injective with image `V*_β`.
pub fn verify_phistar(cfg: &FrameConfig, budget: u128) -> Result<EnumReport> {
    verify_graph_sum(cfg, Bundle::HStar, budget)
}

/// `V_β ∩ V*_β = {Σ ℓ_i}` and `V̄_β ∩ V̄*_β = V_β ∩ V*_β`.
pub fn verify_transversal(cfg: &FrameConfig, budget: u128) -> Result<EnumReport> {
    let mut report = EnumReport::new("grass verify-transversal", cfg.report_config(budget));
    let all = grassmannian(cfg, budget)?;
    let pick = |a: SchubertFilter, b: SchubertFilter| -> BTreeSet<Subspace> {
        all.iter()
            .filter(|l| satisfies(cfg, l, a) && satisfies(cfg, l, b))
            .cloned()
            .collect()
    };
    let open = pick(SchubertFilter::Open, SchubertFilter::StarOpen);
    let closed = pick(SchubertFilter::Closed, SchubertFilter::StarClosed);
    let sums: BTreeSet<Subspace> = cfg
        .window_lines()
        .into_iter()
        .multi_cartesian_product()
        .map(|ls| sum_all(&ls, cfg.n(), cfg.field()))
        .collect();
    report.count("open_intersection", open.len() as u128);
    report.count("closed_intersection", closed.len() as u128);
    report.count("p_points", sums.len() as u128);
    report.check("open_intersection_is_p", open == sums);
    report.check("closed_intersection_is_open", closed == open);
    for l in closed.difference(&open) {
        report.witness("closed_intersection_is_open", &[l]);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::unit;
    use crate::report::DEFAULT_BUDGET as B;

    fn gf(p: u32) -> Fp {
        Fp::new(p).unwrap()
    }

    fn coord(n: usize, idx: &[usize]) -> Subspace {
        Subspace::coordinate(n, gf(2), idx.iter().map(|i| i - 1))
    }

    #[test]
    fn multi_index_validation() {
        assert!(MultiIndex::new(4, vec![]).is_err());
        assert!(MultiIndex::new(4, vec![0, 2]).is_err());
        assert!(MultiIndex::new(4, vec![2, 2]).is_err());
        assert!(MultiIndex::new(4, vec![3, 5]).is_err());
        let b = MultiIndex::new(5, vec![2, 4]).unwrap();
        assert_eq!(b.cell_dim(), 3);
        assert_eq!(b.hstar0_dim(), 2 + 1);
    }

    #[test]
    fn default_frame_n4_beta24() {
        let cfg = make_frame(4, gf(2), &[2, 4], None).unwrap();
        assert_eq!(cfg.line(1), &coord(4, &[1]));
        assert_eq!(cfg.perp(1), &coord(4, &[2]));
        assert_eq!(cfg.line(2), &coord(4, &[3]));
        assert_eq!(cfg.perp(2), &coord(4, &[4]));
        assert!(cfg.perp(3).is_zero());
        assert_eq!(cfg.v(1, 1), coord(4, &[1, 4]));
        assert_eq!(cfg.v(2, 2), coord(4, &[1, 3]));
    }

    #[test]
    fn custom_lines_are_validated() {
        let f = gf(3);
        let ok = make_frame(4, f, &[2, 4], Some(&[vec![1, 2, 0, 0], vec![0, 0, 0, 1]])).unwrap();
        assert_eq!(ok.perp(1).dim(), 1);
        assert!(make_frame(4, f, &[2, 4], Some(&[vec![0, 0, 1, 0], unit(4, 3)])).is_err());
        assert!(make_frame(4, f, &[2, 4], Some(&[vec![0; 4], unit(4, 3)])).is_err());
    }

    #[test]
    fn zero_maps_give_base_point() {
        let cfg = make_frame(5, gf(2), &[1, 3, 5], None).unwrap();
        for bundle in [Bundle::H, Bundle::HStar] {
            let targets = map_targets(&cfg, &cfg.lines, bundle).unwrap();
            let t = GraphTuple {
                lines: cfg.lines.clone(),
                maps: cfg
                    .lines
                    .iter()
                    .zip(targets)
                    .map(|(l, t)| LinearMap::zero(l.clone(), t))
                    .collect(),
            };
            let l = match bundle {
                Bundle::H => phi(&cfg, &t),
                Bundle::HStar => phi_star(&cfg, &t),
            };
            assert_eq!(l.unwrap(), cfg.base_point());
        }
    }

    #[test]
    fn phi_reproduces_open_variety() {
        let cfg = make_frame(4, gf(2), &[2, 4], None).unwrap();
        let r = verify_phi(&cfg, B).unwrap();
        assert!(r.passed(), "{:?}", r.failed_checks());
        assert_eq!(r.counts["image"], 3 * 3 * 2);
    }

    #[test]
    fn phistar_reproduces_star_variety() {
        let cfg = make_frame(4, gf(2), &[1, 3], None).unwrap();
        let r = verify_phistar(&cfg, B).unwrap();
        assert!(r.passed(), "{:?}", r.failed_checks());
    }

    #[test]
    fn filters() {
        let cfg = make_frame(4, gf(2), &[3, 4], None).unwrap();
        assert_eq!(vbeta_points(&cfg, SchubertFilter::Closed, B).unwrap().len(), 35);
        for (beta, p) in [(vec![2, 4], 2), (vec![1, 3], 3), (vec![2, 3], 2)] {
            let cfg = make_frame(4, gf(p), &beta, None).unwrap();
            let cell = vbeta_points(&cfg, SchubertFilter::Cell, B).unwrap().len() as u128;
            assert_eq!(cell, (p as u128).pow(cfg.multi_index().cell_dim() as u32));
        }
    }

    #[test]
    fn transversal_identity() {
        for beta in [vec![2, 4], vec![1, 3], vec![3]] {
            let cfg = make_frame(4, gf(2), &beta, None).unwrap();
            let r = verify_transversal(&cfg, B).unwrap();
            assert!(r.passed(), "{beta:?}: {:?}", r.failed_checks());
        }
    }
}

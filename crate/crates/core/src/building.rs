//! The apartment building of a permutation: the non-redundant
//! Grassmannian factors of the bioriented flag variety, organised by
//! dimension.

use serde::Serialize;

use crate::permcomb::{Permutation, RankMatrix};

/// A label `(row, column)` of the rank-matrix grid, 1-based.
pub type Label = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Building {
    pub n: usize,
    /// `floors[i - 1]` holds the apartments of level `i`, sorted by row.
    pub floors: Vec<Vec<Label>>,
}

impl Building {
    pub fn counts(&self) -> Vec<usize> {
        self.floors.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.floors.iter().map(Vec::len).sum()
    }
}

/// Runs the building algorithm. Graph labels `(i, w(i))` sit on the floor
/// `1 + #{j < i : w(j) < w(i)}`; each pair of consecutive apartments on a
/// floor opens one on the next floor at their componentwise maximum. The
/// top apartment `(n, n)` is dropped.
pub fn build_building(w: &Permutation) -> Building {
    let n = w.n();
    if n == 0 {
        return Building { n, floors: Vec::new() };
    }
    let mut graph_floors: Vec<Vec<Label>> = vec![Vec::new(); n];
    for i in 1..=n {
        let level = 1 + (1..i).filter(|&j| w.at(j) < w.at(i)).count();
        graph_floors[level - 1].push((i, w.at(i)));
    }
    let mut floors: Vec<Vec<Label>> = Vec::with_capacity(n);
    for level in 0..n {
        let mut floor = graph_floors[level].clone();
        if let Some(below) = floors.last() {
            floor.extend(below.windows(2).map(|p| (p[0].0.max(p[1].0), p[0].1.max(p[1].1))));
        }
        floor.sort_unstable();
        floor.dedup();
        floors.push(floor);
    }
    let top = floors.pop();
    debug_assert_eq!(top, Some(vec![(n, n)]));
    Building { n, floors }
}

/// Apartments per level `1..n-1`.
pub fn nonredundant_counts(w: &Permutation) -> Vec<usize> {
    build_building(w).counts()
}

/// Number of rank-matrix entries equal to `i`, for `i = 1..n-1`.
pub fn raw_counts(w: &Permutation) -> Vec<usize> {
    let n = w.n();
    let r = w.rank_matrix();
    let mut counts = vec![0; n.saturating_sub(1)];
    for p in 1..=n {
        for q in 1..=n {
            let v = r.get(p, q);
            if v > 0 && v < n {
                counts[v - 1] += 1;
            }
        }
    }
    counts
}

/// Survivors of the elimination on the full rank matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dedup {
    /// `positions[i - 1]` are the surviving positions of value `i`, in
    /// row-major scan order.
    pub positions: Vec<Vec<Label>>,
}

impl Dedup {
    pub fn counts(&self) -> Vec<usize> {
        self.positions.iter().map(Vec::len).collect()
    }
}

/// Keeps the first copy of each value in every row and column, scanning
/// left to right and top to bottom, after dropping the values 0 and `n`.
pub fn dedup_rank_matrix(w: &Permutation) -> Dedup {
    let n = w.n();
    let r = w.rank_matrix();
    let mut positions = vec![Vec::new(); n.saturating_sub(1)];
    for p in 1..=n {
        for q in 1..=n {
            let v = r.get(p, q);
            if v == 0 || v == n {
                continue;
            }
            let in_row = (1..q).any(|c| r.get(p, c) == v);
            let in_col = (1..p).any(|c| r.get(c, q) == v);
            if !in_row && !in_col {
                positions[v - 1].push((p, q));
            }
        }
    }
    Dedup { positions }
}

/// Checks the structural facts about survivors. Returns a description of
/// the first violation.
pub fn check_building_facts(w: &Permutation) -> Result<(), String> {
    let n = w.n();
    let r: RankMatrix = w.rank_matrix();
    let dedup = dedup_rank_matrix(w);
    let survives = |pos: Label| {
        let v = r.get(pos.0, pos.1);
        v > 0 && v < n && dedup.positions[v - 1].contains(&pos)
    };
    for (idx, level) in dedup.positions.iter().enumerate() {
        let i = idx + 1;
        if level.is_empty() {
            return Err(format!("{w}: level {i} is empty"));
        }
        // Row-major order of same-value survivors runs from south-west
        // to north-east only if columns strictly decrease.
        for pair in level.windows(2) {
            let ((a, b), (c, d)) = (pair[0], pair[1]);
            if !(a < c && b > d) {
                return Err(format!("{w}: level {i} survivors {:?} not NE/SW", pair));
            }
        }
        for &(p, q) in level {
            if r.get(p - 1, q) != i - 1 || r.get(p, q - 1) != i - 1 {
                return Err(format!("{w}: ({p},{q}) north/west neighbours are not {}", i - 1));
            }
        }
        for pair in level.windows(2) {
            let corner = (pair[1].0, pair[0].1);
            if r.get(corner.0, corner.1) != i + 1 {
                return Err(format!("{w}: common neighbour {corner:?} has wrong value"));
            }
            if i + 1 < n && !survives(corner) {
                return Err(format!("{w}: common neighbour {corner:?} is redundant"));
            }
        }
    }
    for i in 1..=n {
        let pos = (i, w.at(i));
        let v = r.get(pos.0, pos.1);
        if v == n {
            if !(i == n && w.at(n) == n) {
                return Err(format!("{w}: graph position {pos:?} has value n"));
            }
        } else if !survives(pos) {
            return Err(format!("{w}: graph position {pos:?} is redundant"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma() -> Permutation {
        "4,8,6,2,7,3,1,5".parse().unwrap()
    }

    #[test]
    fn sigma_building() {
        let b = build_building(&sigma());
        assert_eq!(b.counts(), vec![3, 5, 4, 4, 4, 3, 2]);
        assert_eq!(b.total(), 25);
        assert_eq!(b.floors[3], vec![(4, 8), (5, 7), (6, 6), (7, 4)]);
        assert_eq!(raw_counts(&sigma()), vec![18, 10, 8, 6, 4, 3, 2]);
        assert_eq!(dedup_rank_matrix(&sigma()).counts(), b.counts());
    }

    #[test]
    fn small_buildings() {
        let id = Permutation::identity(4);
        assert_eq!(nonredundant_counts(&id), vec![1, 1, 1]);
        let b = build_building(&"2,1".parse().unwrap());
        assert_eq!(b.floors, vec![vec![(1, 2), (2, 1)]]);
        assert_eq!(dedup_rank_matrix(&Permutation::identity(3)).counts(), vec![1, 1]);
    }

    #[test]
    fn facts_hold_for_sigma() {
        check_building_facts(&sigma()).unwrap();
    }
}

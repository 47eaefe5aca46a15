use super::filtration::FilteredComplex;
use super::intersection::intersection_betti;
use super::perversity::Perversity;
use super::StratifiedError;
use crate::simplicial::is_pseudomanifold;

/// One row of the duality comparison: `rank IH^p̄_i` against `rank IH^q̄_{n-i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityRow {
    pub degree: usize,
    pub rank_p: usize,
    pub rank_q_dual: usize,
}

impl DualityRow {
    pub fn symmetric(&self) -> bool {
        self.rank_p == self.rank_q_dual
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub p: Perversity,
    pub q: Perversity,
    /// Set when the input is not a pseudomanifold and the check was skipped.
    pub skipped: Option<String>,
    pub rows: Vec<DualityRow>,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.skipped.is_none() && self.rows.iter().all(DualityRow::symmetric)
    }
}

/// Compares the ranks of `IH^p̄_i` and `IH^q̄_{n-i}` for `q̄ = t̄ - p̄`. Only
/// the rank consequence of a nondegenerate pairing is checked.
pub fn duality_rank_check(f: &FilteredComplex, p: &Perversity) -> Result<DualityReport, StratifiedError> {
    let q = p.complement()?;
    let pm = is_pseudomanifold(f.ambient());
    if !pm.is_pseudomanifold {
        return Ok(DualityReport {
            p: p.clone(),
            q,
            skipped: Some(format!(
                "not a pseudomanifold: {} impure maximal simplices, {} ridges without two cofaces",
                pm.not_pure.len(),
                pm.bad_ridges.len()
            )),
            rows: Vec::new(),
        });
    }
    let n = f.n();
    let ih_p = intersection_betti(f, p)?;
    let ih_q = intersection_betti(f, &q)?;
    let rows = (0..=n)
        .map(|i| DualityRow {
            degree: i,
            rank_p: ih_p[&i],
            rank_q_dual: ih_q[&(n - i)],
        })
        .collect();
    Ok(DualityReport {
        p: p.clone(),
        q,
        skipped: None,
        rows,
    })
}

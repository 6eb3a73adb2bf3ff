use ivalcore::CInterval;

/// Dense grid of θ₁-derivative enclosures.
///
/// `values[a][b][j]` is an enclosure of the order-`j` derivative at the grid
/// point with first-axis index `a` and second-axis index `b`.  The axis
/// meaning depends on the producer: [`theta_grid_x`](crate::theta_grid_x)
/// indexes (x-node, ψ-node), [`theta_grid_z`](crate::theta_grid_z) indexes
/// (z-node, q-node).  Each entry contains the exact derivative value plus the
/// certified truncation error box shared by the whole grid.
#[derive(Clone, Debug)]
pub struct ThetaGridResult {
    pub values: Vec<Vec<Vec<CInterval>>>,
    /// Number of series terms summed before truncation.
    pub n_terms: usize,
    /// Radius of the truncation error box added to every entry.
    pub trunc_err: f64,
}

impl ThetaGridResult {
    /// Enclosure at first-axis index `a`, second-axis index `b`, derivative
    /// order `j`.
    #[inline]
    pub fn at(&self, a: usize, b: usize, j: usize) -> CInterval {
        self.values[a][b][j]
    }

    /// Number of derivative orders stored (m + 1).
    pub fn orders(&self) -> usize {
        self.values.first().and_then(|r| r.first()).map_or(0, Vec::len)
    }
}

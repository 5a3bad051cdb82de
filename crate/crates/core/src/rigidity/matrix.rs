use nalgebra::DMatrix;

use crate::framework::Framework;

/// `|E| x 2|V|` matrix; the row of edge `(i, j)` holds `p_i - p_j` in the
/// columns of `i` and `p_j - p_i` in the columns of `j`.
pub fn rigidity_matrix(fw: &Framework) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(fw.edge_count(), 2 * fw.vertex_count());
    for (k, &(i, j)) in fw.edges().iter().enumerate() {
        let d = fw.position(i) - fw.position(j);
        m[(k, 2 * i)] = d.dx;
        m[(k, 2 * i + 1)] = d.dy;
        m[(k, 2 * j)] = -d.dx;
        m[(k, 2 * j + 1)] = -d.dy;
    }
    m
}

/// Number of singular values above `eps_rank` times the largest one.
pub fn numerical_rank(m: &DMatrix<f64>, eps_rank: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().singular_values();
    let max = sv.max();
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > eps_rank * max).count()
}

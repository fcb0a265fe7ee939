//! Dense row-major tables over element bitmasks, with data-parallel kernels.
//!
//! Rows are indexed by domain bitmasks, columns by codomain bitmasks. The
//! hot loops come in a sequential and a rayon flavour with identical
//! floating-point evaluation order, so parallel results are bit-identical
//! to sequential ones; the dispatchers pick rayon only for tables above
//! [`PAR_MIN_LEN`] when the `parallel` feature is enabled.

/// Minimum table size (entries) before the rayon paths kick in.
pub const PAR_MIN_LEN: usize = 1 << 12;

/// Sequential table kernels. Always compiled; the reference evaluation order.
pub mod seq {
    use crate::transform::unit_strides;

    pub fn map_rows(data: &mut [f64], cols: usize, f: impl Fn(&mut [f64]) + Sync + Send) {
        for row in data.chunks_exact_mut(cols) {
            f(row);
        }
    }

    /// Per row-axis bit: subtract each bit-set row from its bit-clear partner.
    /// This is the Möbius transform over supersets applied along rows.
    pub fn sweep_rows_sub(data: &mut [f64], cols: usize) {
        for stride in unit_strides(data.len() / cols) {
            for block in data.chunks_exact_mut(2 * stride * cols) {
                let (lo, hi) = block.split_at_mut(stride * cols);
                for (z, o) in lo.iter_mut().zip(hi.iter()) {
                    *z -= *o;
                }
            }
        }
    }

    /// Zeta transform over supersets along rows: inverse of [`sweep_rows_sub`].
    pub fn sweep_rows_add(data: &mut [f64], cols: usize) {
        for stride in unit_strides(data.len() / cols) {
            for block in data.chunks_exact_mut(2 * stride * cols) {
                let (lo, hi) = block.split_at_mut(stride * cols);
                for (z, o) in lo.iter_mut().zip(hi.iter()) {
                    *z += *o;
                }
            }
        }
    }

    /// `out[a][c] = Σ_b lhs[a][b] · rhs[b][c]`, accumulated in ascending `b`.
    pub fn matmul(lhs: &[f64], inner: usize, rhs: &[f64], cols: usize) -> Vec<f64> {
        let rows = lhs.len() / inner;
        let mut out = vec![0.0; rows * cols];
        for (a, out_row) in out.chunks_exact_mut(cols).enumerate() {
            for (b, rhs_row) in rhs.chunks_exact(cols).enumerate() {
                let w = lhs[a * inner + b];
                for (acc, r) in out_row.iter_mut().zip(rhs_row.iter()) {
                    *acc += w * *r;
                }
            }
        }
        out
    }

    /// Row vector times matrix: `out[c] = Σ_r v[r] · m[r][c]` in ascending `r`.
    pub fn vec_times_matrix(v: &[f64], m: &[f64], cols: usize) -> Vec<f64> {
        let mut out = vec![0.0; cols];
        for (w, row) in v.iter().zip(m.chunks_exact(cols)) {
            for (acc, x) in out.iter_mut().zip(row.iter()) {
                *acc += *w * *x;
            }
        }
        out
    }

    /// Matrix times column vector: `out[r] = Σ_c m[r][c] · v[c]`.
    pub fn matrix_times_vec(m: &[f64], cols: usize, v: &[f64]) -> Vec<f64> {
        m.chunks_exact(cols)
            .map(|row| row.iter().zip(v.iter()).fold(0.0, |acc, (x, w)| acc + x * w))
            .collect()
    }
}

/// Rayon table kernels. Work is split only across independent output rows
/// or row blocks; per-element accumulation order matches [`seq`] exactly.
#[cfg(feature = "parallel")]
pub mod par {
    use rayon::prelude::*;

    use crate::transform::unit_strides;

    pub fn map_rows(data: &mut [f64], cols: usize, f: impl Fn(&mut [f64]) + Sync + Send) {
        data.par_chunks_exact_mut(cols).for_each(f);
    }

    pub fn sweep_rows_sub(data: &mut [f64], cols: usize) {
        for stride in unit_strides(data.len() / cols) {
            data.par_chunks_exact_mut(2 * stride * cols).for_each(|block| {
                let (lo, hi) = block.split_at_mut(stride * cols);
                for (z, o) in lo.iter_mut().zip(hi.iter()) {
                    *z -= *o;
                }
            });
        }
    }

    pub fn sweep_rows_add(data: &mut [f64], cols: usize) {
        for stride in unit_strides(data.len() / cols) {
            data.par_chunks_exact_mut(2 * stride * cols).for_each(|block| {
                let (lo, hi) = block.split_at_mut(stride * cols);
                for (z, o) in lo.iter_mut().zip(hi.iter()) {
                    *z += *o;
                }
            });
        }
    }

    pub fn matmul(lhs: &[f64], inner: usize, rhs: &[f64], cols: usize) -> Vec<f64> {
        let rows = lhs.len() / inner;
        let mut out = vec![0.0; rows * cols];
        out.par_chunks_exact_mut(cols).enumerate().for_each(|(a, out_row)| {
            for (b, rhs_row) in rhs.chunks_exact(cols).enumerate() {
                let w = lhs[a * inner + b];
                for (acc, r) in out_row.iter_mut().zip(rhs_row.iter()) {
                    *acc += w * *r;
                }
            }
        });
        out
    }

    pub fn vec_times_matrix(v: &[f64], m: &[f64], cols: usize) -> Vec<f64> {
        let chunk = cols.div_ceil(rayon::current_num_threads().max(1)).max(64);
        let mut out = vec![0.0; cols];
        out.par_chunks_mut(chunk).enumerate().for_each(|(ci, out_chunk)| {
            let start = ci * chunk;
            for (w, row) in v.iter().zip(m.chunks_exact(cols)) {
                let row = &row[start..start + out_chunk.len()];
                for (acc, x) in out_chunk.iter_mut().zip(row.iter()) {
                    *acc += *w * *x;
                }
            }
        });
        out
    }

    pub fn matrix_times_vec(m: &[f64], cols: usize, v: &[f64]) -> Vec<f64> {
        m.par_chunks_exact(cols)
            .map(|row| row.iter().zip(v.iter()).fold(0.0, |acc, (x, w)| acc + x * w))
            .collect()
    }
}

macro_rules! dispatch {
    ($len:expr, $call:ident($($arg:expr),*)) => {{
        #[cfg(feature = "parallel")]
        if $len >= PAR_MIN_LEN {
            return par::$call($($arg),*);
        }
        seq::$call($($arg),*)
    }};
}

pub(crate) fn map_rows(data: &mut [f64], cols: usize, f: impl Fn(&mut [f64]) + Sync + Send) {
    dispatch!(data.len(), map_rows(data, cols, f))
}

pub(crate) fn sweep_rows_sub(data: &mut [f64], cols: usize) {
    dispatch!(data.len(), sweep_rows_sub(data, cols))
}

pub(crate) fn sweep_rows_add(data: &mut [f64], cols: usize) {
    dispatch!(data.len(), sweep_rows_add(data, cols))
}

pub(crate) fn matmul(lhs: &[f64], inner: usize, rhs: &[f64], cols: usize) -> Vec<f64> {
    dispatch!(lhs.len().max(rhs.len()), matmul(lhs, inner, rhs, cols))
}

pub(crate) fn vec_times_matrix(v: &[f64], m: &[f64], cols: usize) -> Vec<f64> {
    dispatch!(m.len(), vec_times_matrix(v, m, cols))
}

pub(crate) fn matrix_times_vec(m: &[f64], cols: usize, v: &[f64]) -> Vec<f64> {
    dispatch!(m.len(), matrix_times_vec(m, cols, v))
}

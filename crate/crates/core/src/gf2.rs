//! Linear algebra over GF(2) on words packed into `u64` (bit `i` is coordinate `i`).

/// Row-reduces `rows` in place order and returns the nonzero reduced rows
/// together with their pivot columns.
pub fn rref(rows: &[u64], n: usize) -> (Vec<u64>, Vec<usize>) {
    let mut m: Vec<u64> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let bit = 1u64 << col;
        let Some(p) = (r..m.len()).find(|&i| m[i] & bit != 0) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r];
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && *row & bit != 0 {
                *row ^= pivot;
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[u64], n: usize) -> usize {
    rref(rows, n).0.len()
}

/// Basis of `{x : <x, r> = 0 for every row r}`.
pub fn null_space(rows: &[u64], n: usize) -> Vec<u64> {
    let (reduced, pivots) = rref(rows, n);
    let mut basis = Vec::with_capacity(n - pivots.len());
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = 1u64 << free;
        for (row, &p) in reduced.iter().zip(&pivots) {
            if row >> free & 1 == 1 {
                v |= 1u64 << p;
            }
        }
        basis.push(v);
    }
    basis
}

/// Calls `f` on every element of the span of `basis` (assumed independent),
/// walking the span in Gray-code order starting at zero.
pub fn for_each_in_span(basis: &[u64], mut f: impl FnMut(u64)) {
    let k = basis.len();
    let mut x = 0u64;
    f(x);
    for i in 1u64..(1u64 << k) {
        x ^= basis[i.trailing_zeros() as usize];
        f(x);
    }
}

/// All elements of the span, in Gray-code order.
pub fn span(basis: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(1 << basis.len());
    for_each_in_span(basis, |x| out.push(x));
    out
}

pub fn inner(a: u64, b: u64) -> u32 {
    (a & b).count_ones() & 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_null_space() {
        let rows = [0b0000111u64, 0b0011100, 0b1110000, 0b1110000];
        assert_eq!(rank(&rows, 7), 3);
        let ns = null_space(&rows, 7);
        assert_eq!(ns.len(), 4);
        for v in &ns {
            for r in &rows {
                assert_eq!(inner(*v, *r), 0);
            }
        }
        assert_eq!(rank(&ns, 7), 4);
    }

    #[test]
    fn span_is_closed_and_distinct() {
        let basis = [0b101u64, 0b011];
        let mut s = span(&basis);
        s.sort_unstable();
        assert_eq!(s, vec![0, 0b011, 0b101, 0b110]);
        assert_eq!(span(&[]), vec![0]);
    }
}

//! Small exact integer linear algebra for normals of point configurations.

use num_integer::Integer;

pub(crate) fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        n => {
            let mut acc = 0i128;
            for col in 0..n {
                if m[0][col] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != col)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let term = m[0][col] * det(&minor);
                acc += if col % 2 == 0 { term } else { -term };
            }
            acc
        }
    }
}

/// Generalized cross product of `n - 1` vectors in `Z^n`: a vector orthogonal
/// to all rows, zero iff the rows are dependent.
pub(crate) fn cross(rows: &[Vec<i128>], n: usize) -> Vec<i128> {
    debug_assert_eq!(rows.len() + 1, n);
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let d = det(&minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// Orients `w` into the nonnegative orthant and divides by the gcd of its
/// entries. Returns `None` for the zero vector or mixed signs.
pub(crate) fn primitive_nonnegative(w: &[i128]) -> Option<Vec<u64>> {
    let pos = w.iter().any(|&x| x > 0);
    let neg = w.iter().any(|&x| x < 0);
    if pos == neg {
        return None;
    }
    let g = w.iter().fold(0i128, |g, &x| g.gcd(&x));
    Some(w.iter().map(|&x| (x.abs() / g) as u64).collect())
}

/// Calls `f` with every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// Every nonnegative primitive normal of a hyperplane through `n`
/// points/directions drawn from `points` (at least one) and the coordinate
/// axes. Facet normals of `conv(points) + R^n_{>=0}` are among them.
pub(crate) fn candidate_normals(points: &[Vec<i128>], n: usize) -> Vec<Vec<u64>> {
    let mut out = std::collections::BTreeSet::new();
    if n == 1 {
        out.insert(vec![1u64]);
        return out.into_iter().collect();
    }
    for s in 1..=n.min(points.len()) {
        let dirs = n - s;
        for_each_subset(points.len(), s, &mut |pts| {
            for_each_subset(n, dirs, &mut |axes| {
                let base = &points[pts[0]];
                let mut rows: Vec<Vec<i128>> = pts[1..]
                    .iter()
                    .map(|&p| points[p].iter().zip(base).map(|(a, b)| a - b).collect())
                    .collect();
                for &ax in axes {
                    let mut e = vec![0i128; n];
                    e[ax] = 1;
                    rows.push(e);
                }
                if let Some(w) = primitive_nonnegative(&cross(&rows, n)) {
                    out.insert(w);
                }
            });
        });
    }
    out.into_iter().collect()
}

/// Rank of an integer matrix (fraction-free elimination, rows reduced by
/// their gcd to keep entries small).
pub(crate) fn rank(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let cols = m.first().map(Vec::len).unwrap_or(0);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i == r || m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[r][c], m[i][c]);
            let row_r = m[r].clone();
            for (x, y) in m[i].iter_mut().zip(&row_r) {
                *x = *x * a - *y * b;
            }
            let g = m[i].iter().fold(0i128, |g, &x| g.gcd(&x));
            if g > 1 {
                m[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

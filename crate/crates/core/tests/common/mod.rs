//! Test-only reference computations, written without the crate's solvers.

#![allow(dead_code)]

use sroman_core::Graph;

/// Both conditions checked from raw adjacency.
pub fn naive_is_srdf(g: &Graph, values: &[i64]) -> bool {
    (0..g.vertex_count()).all(|v| {
        let mut sum = values[v];
        let mut guarded = false;
        for (u, &value) in values.iter().enumerate() {
            if g.has_edge(u, v) {
                sum += value;
                guarded |= value == 2;
            }
        }
        sum >= 1 && (values[v] != -1 || guarded)
    })
}

/// Minimum weight over every labeling, with the lexicographically smallest
/// optimal labeling under the order `-1 < 1 < 2`, vertex 0 first.
pub fn naive_gamma(g: &Graph) -> (i64, Vec<i64>) {
    const VALUES: [i64; 3] = [-1, 1, 2];
    let n = g.vertex_count();
    let total = 3usize.pow(n as u32);
    let mut best: Option<(i64, Vec<i64>)> = None;
    for code in 0..total {
        let mut values = vec![0; n];
        let mut rest = code;
        for v in (0..n).rev() {
            values[v] = VALUES[rest % 3];
            rest /= 3;
        }
        let weight: i64 = values.iter().sum();
        if best.as_ref().is_some_and(|(w, _)| weight >= *w) {
            continue;
        }
        if naive_is_srdf(g, &values) {
            best = Some((weight, values));
        }
    }
    best.expect("all-ones labeling is always valid")
}

const COLUMNS: [(i64, i64); 9] = [
    (-1, -1),
    (-1, 1),
    (-1, 2),
    (1, -1),
    (1, 1),
    (1, 2),
    (2, -1),
    (2, 1),
    (2, 2),
];

/// Whether the middle column of a window satisfies both conditions. `None`
/// marks a missing neighbor column at a ladder end.
fn column_ok(prev: Option<(i64, i64)>, cur: (i64, i64), next: Option<(i64, i64)>) -> bool {
    let side = |c: Option<(i64, i64)>, top: bool| match c {
        Some((a, b)) => {
            if top {
                a
            } else {
                b
            }
        }
        None => 0,
    };
    let (a, b) = cur;
    let up = side(prev, true) + side(next, true);
    let down = side(prev, false) + side(next, false);
    let top_sum = a + b + up;
    let bottom_sum = a + b + down;
    let top_guard = b == 2 || side(prev, true) == 2 || side(next, true) == 2;
    let bottom_guard = a == 2 || side(prev, false) == 2 || side(next, false) == 2;
    top_sum >= 1 && bottom_sum >= 1 && (a != -1 || top_guard) && (b != -1 || bottom_guard)
}

/// Ladder optimum by a dynamic program over pairs of consecutive columns.
pub fn window_ladder(n: usize) -> i64 {
    assert!(n >= 2);
    let weight = |c: (i64, i64)| c.0 + c.1;
    // best[i][j]: columns (k-1, k) = (COLUMNS[i], COLUMNS[j]) with columns
    // before k all checked.
    let mut best = [[i64::MAX; 9]; 9];
    for (i, &c0) in COLUMNS.iter().enumerate() {
        for (j, &c1) in COLUMNS.iter().enumerate() {
            if column_ok(None, c0, Some(c1)) {
                best[i][j] = weight(c0) + weight(c1);
            }
        }
    }
    for _ in 2..n {
        let mut next = [[i64::MAX; 9]; 9];
        for i in 0..9 {
            for j in 0..9 {
                if best[i][j] == i64::MAX {
                    continue;
                }
                for k in 0..9 {
                    if column_ok(Some(COLUMNS[i]), COLUMNS[j], Some(COLUMNS[k])) {
                        let w = best[i][j] + weight(COLUMNS[k]);
                        next[j][k] = next[j][k].min(w);
                    }
                }
            }
        }
        best = next;
    }
    let mut answer = i64::MAX;
    for i in 0..9 {
        for j in 0..9 {
            if best[i][j] != i64::MAX && column_ok(Some(COLUMNS[i]), COLUMNS[j], None) {
                answer = answer.min(best[i][j]);
            }
        }
    }
    answer
}

/// Circular ladder optimum: the first two columns are fixed, the window DP
/// runs around the ring, and the last two checks wrap to the fixed columns.
pub fn window_circular_ladder(n: usize) -> i64 {
    assert!(n >= 3);
    let weight = |c: (i64, i64)| c.0 + c.1;
    let mut answer = i64::MAX;
    for f0 in 0..9 {
        for f1 in 0..9 {
            let mut best = [[i64::MAX; 9]; 9];
            best[f0][f1] = weight(COLUMNS[f0]) + weight(COLUMNS[f1]);
            for _ in 2..n {
                let mut next = [[i64::MAX; 9]; 9];
                for i in 0..9 {
                    for j in 0..9 {
                        if best[i][j] == i64::MAX {
                            continue;
                        }
                        for k in 0..9 {
                            if column_ok(Some(COLUMNS[i]), COLUMNS[j], Some(COLUMNS[k])) {
                                let w = best[i][j] + weight(COLUMNS[k]);
                                next[j][k] = next[j][k].min(w);
                            }
                        }
                    }
                }
                best = next;
            }
            for i in 0..9 {
                for j in 0..9 {
                    if best[i][j] == i64::MAX {
                        continue;
                    }
                    let (prev, last, first, second) =
                        (COLUMNS[i], COLUMNS[j], COLUMNS[f0], COLUMNS[f1]);
                    if column_ok(Some(prev), last, Some(first))
                        && column_ok(Some(last), first, Some(second))
                    {
                        answer = answer.min(best[i][j]);
                    }
                }
            }
        }
    }
    answer
}

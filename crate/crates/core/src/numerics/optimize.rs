//! Bounded 1-D maximization: dense grid scan followed by golden-section
//! refinement around the best cell.

/// Maximizes `f` on the closed interval `[lo, hi]`.
///
/// Scans a uniform grid of `grid` points (at least 3), then refines around
/// the best grid cell by golden-section search until the bracket width falls
/// below `tol`. The returned maximum is never below the grid maximum, and
/// ties resolve to the smaller argument, so the result is deterministic.
pub fn maximize_1d<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, grid: usize, tol: f64) -> (f64, f64) {
    assert!(grid >= 3, "grid must have at least 3 points");
    assert!(hi >= lo, "interval must be ordered");
    if hi == lo {
        return (lo, f(lo));
    }

    // Grid scan; strict > keeps the smallest argument on ties.
    let mut best_i = 0usize;
    let mut best_v = f64::NEG_INFINITY;
    let step = (hi - lo) / (grid - 1) as f64;
    for i in 0..grid {
        let x = if i + 1 == grid { hi } else { lo + i as f64 * step };
        let v = f(x);
        if v > best_v {
            best_v = v;
            best_i = i;
        }
    }
    let best_x = if best_i + 1 == grid {
        hi
    } else {
        lo + best_i as f64 * step
    };

    // Golden-section refinement on the two cells adjacent to the best point.
    let mut a = if best_i == 0 { lo } else { best_x - step };
    let mut b = if best_i + 1 >= grid { hi } else { best_x + step };
    a = a.max(lo);
    b = b.min(hi);
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut iter = 0;
    while b - a > tol && iter < 200 {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
        iter += 1;
    }

    // Return the best point seen; never below the grid maximum.
    let mid = 0.5 * (a + b);
    let fm = f(mid);
    let mut cands = [(best_x, best_v), (x1, f1), (x2, f2), (mid, fm)];
    cands.sort_by(|p, q| {
        q.1.partial_cmp(&p.1)
            .unwrap()
            .then_with(|| p.0.partial_cmp(&q.0).unwrap())
    });
    cands[0]
}

// Nelder-Mead simplex search in the plane.

use crate::geometry::Point;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Outcome {
    pub best: Point,
    pub value: f64,
    pub evaluations: usize,
    /// Largest distance from the best vertex to the other two.
    pub size: f64,
    pub converged: bool,
}

pub(crate) struct Stop {
    pub x_tol: f64,
    pub f_tol: f64,
    pub budget: usize,
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

pub(crate) fn nelder_mead<F: FnMut(Point) -> f64>(
    mut f: F,
    start: Point,
    step: f64,
    stop: &Stop,
) -> Outcome {
    let mut evals = 0usize;
    let mut eval = |p: Point, evals: &mut usize| {
        *evals += 1;
        f(p)
    };
    let mut s = [
        start,
        start + Point::new(step, 0.0),
        start + Point::new(0.0, step),
    ];
    let mut v = [0.0; 3];
    for i in 0..3 {
        v[i] = eval(s[i], &mut evals);
    }
    loop {
        // order: best first, worst last; ties keep lexicographic order
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&a, &b| {
            v[a].total_cmp(&v[b])
                .then(s[a].x.total_cmp(&s[b].x))
                .then(s[a].y.total_cmp(&s[b].y))
        });
        s = idx.map(|i| s[i]);
        v = idx.map(|i| v[i]);

        let size = s[0].dist(s[1]).max(s[0].dist(s[2]));
        let spread = v[2] - v[0];
        if size < stop.x_tol && spread < stop.f_tol {
            return Outcome {
                best: s[0],
                value: v[0],
                evaluations: evals,
                size,
                converged: true,
            };
        }
        if evals + 4 > stop.budget {
            return Outcome {
                best: s[0],
                value: v[0],
                evaluations: evals,
                size,
                converged: false,
            };
        }

        let centroid = s[0].midpoint(s[1]);
        let xr = centroid + (centroid - s[2]) * REFLECT;
        let fr = eval(xr, &mut evals);
        if fr < v[0] {
            let xe = centroid + (xr - centroid) * EXPAND;
            let fe = eval(xe, &mut evals);
            if fe < fr {
                s[2] = xe;
                v[2] = fe;
            } else {
                s[2] = xr;
                v[2] = fr;
            }
        } else if fr < v[1] {
            s[2] = xr;
            v[2] = fr;
        } else {
            let (xc, fc) = if fr < v[2] {
                let xc = centroid + (xr - centroid) * CONTRACT;
                (xc, eval(xc, &mut evals))
            } else {
                let xc = centroid + (s[2] - centroid) * CONTRACT;
                (xc, eval(xc, &mut evals))
            };
            if fc < v[2].min(fr) {
                s[2] = xc;
                v[2] = fc;
            } else {
                for i in 1..3 {
                    s[i] = s[0] + (s[i] - s[0]) * SHRINK;
                    v[i] = eval(s[i], &mut evals);
                }
            }
        }
    }
}

//! Branch-and-bound search over removal sets.
//!
//! Sets are visited in lexicographic order of their sorted vertex lists
//! (`{0}, {0,1}, {0,1,2}, ..., {0,2}, ...`), so every set reached after the
//! incumbent is lex-greater than it. A subtree is cut when no superset can
//! reach a strictly smaller ratio, which keeps the lex-least optimum.
//!
//! Two prunings:
//! * budget bound: removing a vertex of current degree `d` raises the
//!   component count by at most `d - 1`, and `G - S` never has more
//!   components than vertices;
//! * dead vertices: a removed vertex with no neighbour left in `G - S` can
//!   be put back for a strictly smaller ratio, so no superset is optimal.

use crate::bits;

/// Pruning switches. All enabled by default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    pub budget_bound: bool,
    pub dead_vertex_prune: bool,
    /// Deliberately broken bound used for fault-injection tests only.
    #[doc(hidden)]
    pub unsound_bound: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            budget_bound: true,
            dead_vertex_prune: true,
            unsound_bound: false,
        }
    }
}

/// `size / comps` as an exact fraction with small integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Ratio {
    pub num: i128,
    pub den: i128,
}

impl Ratio {
    fn lt(self, o: Ratio) -> bool {
        self.num * o.den < o.num * self.den
    }

    fn le(self, o: Ratio) -> bool {
        self.num * o.den <= o.num * self.den
    }
}

pub(crate) enum Mode {
    /// Find the minimum ratio and its lex-least witness.
    Minimize,
    /// Stop at the first set whose ratio is strictly below the threshold.
    Below,
}

pub(crate) struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    full: u64,
    opts: SolverOptions,
    mode: Mode,
    pub best: Ratio,
    /// `None` while `best` is a bound without a known witness.
    pub witness: Option<u64>,
    done: bool,
}

impl<'a> Search<'a> {
    /// `bound` is an upper bound on the optimum that need not be attained.
    pub fn new(rows: &'a [u64], opts: SolverOptions, mode: Mode, bound: Ratio) -> Self {
        let n = rows.len();
        Search {
            rows,
            n,
            full: bits::full(n),
            opts,
            mode,
            best: bound,
            witness: None,
            done: false,
        }
    }

    /// Whether a set with ratio `r` should replace the incumbent.
    fn improves(&self, r: Ratio) -> bool {
        match self.mode {
            Mode::Minimize => r.lt(self.best) || (self.witness.is_none() && r.le(self.best)),
            Mode::Below => r.lt(self.best),
        }
    }

    pub fn run(&mut self) {
        for v in 0..self.n {
            if self.done {
                break;
            }
            self.visit(1u64 << v, 1, v + 1);
        }
    }

    fn visit(&mut self, set: u64, size: usize, next: usize) {
        let alive = self.full & !set;
        if self.opts.dead_vertex_prune && bits::iter(set).any(|v| self.rows[v] & alive == 0) {
            return;
        }
        let comps = bits::count_components(self.rows, alive);
        if comps >= 2 {
            let r = Ratio {
                num: size as i128,
                den: comps as i128,
            };
            if self.improves(r) {
                self.best = r;
                self.witness = Some(set);
                if matches!(self.mode, Mode::Below) {
                    self.done = true;
                    return;
                }
            }
        }

        let cand = alive & !bits::full(next);
        if cand == 0 {
            return;
        }
        if self.opts.budget_bound && !self.extension_can_improve(alive, cand, size, comps) {
            return;
        }
        for v in bits::iter(cand) {
            self.visit(set | (1u64 << v), size + 1, v + 1);
            if self.done {
                return;
            }
        }
    }

    fn extension_can_improve(&self, alive: u64, cand: u64, size: usize, comps: usize) -> bool {
        let mut gains: Vec<i64> = bits::iter(cand)
            .map(|v| {
                if self.opts.unsound_bound {
                    0
                } else {
                    (self.rows[v] & alive).count_ones() as i64 - 1
                }
            })
            .collect();
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let remaining = (self.n - size) as i64;
        let mut gained = 0i64;
        for (i, g) in gains.iter().enumerate() {
            let r = i as i64 + 1;
            gained += g;
            let ub = (comps as i64 + gained).min(remaining - r);
            if ub >= 2 {
                let ratio = Ratio {
                    num: size as i128 + r as i128,
                    den: ub as i128,
                };
                if self.improves(ratio) {
                    return true;
                }
            }
        }
        false
    }
}

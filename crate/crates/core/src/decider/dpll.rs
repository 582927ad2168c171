//! DPLL with conflict-driven clause learning, two watched literals, VSIDS
//! branching, phase saving and Luby restarts.
//!
//! Nothing depends on time or randomness: activity ties go to the lowest
//! variable index and fresh variables start with phase true, so the search
//! and the model it returns are a function of the clause list and the
//! assumptions alone. Assumptions are asserted as root-level units.

use super::Lit;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct SolveStats {
    pub decisions: u64,
    pub propagations: u64,
    pub conflicts: u64,
    pub restarts: u64,
    pub learned: u64,
}

const UNASSIGNED: i8 = -1;
const NO_REASON: u32 = u32::MAX;
const RESTART_UNIT: u64 = 128;
const VAR_DECAY: f64 = 0.95;

#[derive(Clone, Copy)]
struct ClauseRef {
    start: u32,
    len: u32,
    learnt: bool,
    lbd: u32,
}

#[derive(Clone, Copy)]
struct Watch {
    clause: u32,
    blocker: Lit,
}

pub(crate) struct Dpll {
    num_vars: usize,
    lits: Vec<Lit>,
    clauses: Vec<ClauseRef>,
    watches: Vec<Vec<Watch>>,
    units: Vec<Lit>,
    has_empty: bool,
    value: Vec<i8>,
    level: Vec<u32>,
    reason: Vec<u32>,
    phase: Vec<bool>,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    activity: Vec<f64>,
    var_inc: f64,
    heap: VarHeap,
    seen: Vec<bool>,
    max_learnts: usize,
    pub stats: SolveStats,
}

impl Dpll {
    pub fn new(num_vars: usize, clauses: &[Vec<Lit>]) -> Self {
        let mut solver = Dpll {
            num_vars,
            lits: Vec::new(),
            clauses: Vec::new(),
            watches: vec![Vec::new(); 2 * num_vars],
            units: Vec::new(),
            has_empty: false,
            value: vec![UNASSIGNED; num_vars],
            level: vec![0; num_vars],
            reason: vec![NO_REASON; num_vars],
            phase: vec![true; num_vars],
            trail: Vec::with_capacity(num_vars),
            trail_lim: Vec::new(),
            qhead: 0,
            activity: vec![0.0; num_vars],
            var_inc: 1.0,
            heap: VarHeap::new(num_vars),
            seen: vec![false; num_vars],
            max_learnts: clauses.len() / 3 + 10_000,
            stats: SolveStats::default(),
        };
        for clause in clauses {
            let mut c = clause.clone();
            c.sort_unstable();
            c.dedup();
            // Tautologies can never be falsified.
            if c.windows(2).any(|w| w[0].var() == w[1].var()) {
                continue;
            }
            match c.len() {
                0 => solver.has_empty = true,
                1 => solver.units.push(c[0]),
                _ => {
                    solver.attach(&c, false, 0);
                }
            }
        }
        for v in 0..num_vars {
            solver.heap.insert(v, &solver.activity);
        }
        solver
    }

    fn attach(&mut self, c: &[Lit], learnt: bool, lbd: u32) -> u32 {
        let idx = self.clauses.len() as u32;
        self.clauses.push(ClauseRef {
            start: self.lits.len() as u32,
            len: c.len() as u32,
            learnt,
            lbd,
        });
        self.lits.extend_from_slice(c);
        self.watches[c[0].code()].push(Watch { clause: idx, blocker: c[1] });
        self.watches[c[1].code()].push(Watch { clause: idx, blocker: c[0] });
        idx
    }

    #[inline]
    fn lit_value(&self, lit: Lit) -> i8 {
        let v = self.value[lit.var()];
        if v == UNASSIGNED {
            UNASSIGNED
        } else {
            v ^ lit.is_negated() as i8
        }
    }

    fn decision_level(&self) -> u32 {
        self.trail_lim.len() as u32
    }

    fn assign(&mut self, lit: Lit, reason: u32) {
        let v = lit.var();
        self.value[v] = (!lit.is_negated()) as i8;
        self.level[v] = self.decision_level();
        self.reason[v] = reason;
        self.trail.push(lit);
    }

    /// Unit propagation; returns the conflicting clause, if any.
    fn propagate(&mut self) -> Option<u32> {
        let mut conflict = None;
        while self.qhead < self.trail.len() && conflict.is_none() {
            let falsified = self.trail[self.qhead].negate();
            self.qhead += 1;
            let mut ws = std::mem::take(&mut self.watches[falsified.code()]);
            let (mut i, mut keep) = (0, 0);
            while i < ws.len() {
                let w = ws[i];
                i += 1;
                if self.lit_value(w.blocker) == 1 {
                    ws[keep] = w;
                    keep += 1;
                    continue;
                }
                let c = self.clauses[w.clause as usize];
                let (s, e) = (c.start as usize, (c.start + c.len) as usize);
                if self.lits[s] == falsified {
                    self.lits.swap(s, s + 1);
                }
                let first = self.lits[s];
                if first != w.blocker && self.lit_value(first) == 1 {
                    ws[keep] = Watch { clause: w.clause, blocker: first };
                    keep += 1;
                    continue;
                }
                if let Some(p) = (s + 2..e).find(|&p| self.lit_value(self.lits[p]) != 0) {
                    self.lits.swap(s + 1, p);
                    let moved = self.lits[s + 1];
                    self.watches[moved.code()].push(Watch { clause: w.clause, blocker: first });
                    continue;
                }
                ws[keep] = Watch { clause: w.clause, blocker: first };
                keep += 1;
                if self.lit_value(first) == 0 {
                    conflict = Some(w.clause);
                    while i < ws.len() {
                        ws[keep] = ws[i];
                        keep += 1;
                        i += 1;
                    }
                } else {
                    self.stats.propagations += 1;
                    self.assign(first, w.clause);
                }
            }
            ws.truncate(keep);
            self.watches[falsified.code()] = ws;
        }
        conflict
    }

    fn bump(&mut self, v: usize) {
        self.activity[v] += self.var_inc;
        if self.activity[v] > 1e100 {
            for a in &mut self.activity {
                *a *= 1e-100;
            }
            self.var_inc *= 1e-100;
        }
        self.heap.increased(v, &self.activity);
    }

    /// First-UIP learning. Returns the learned clause (asserting literal
    /// first, highest remaining level second) and the backjump level.
    fn analyze(&mut self, mut conflict: u32) -> (Vec<Lit>, u32) {
        let mut learnt = vec![Lit::new(0, false)];
        let mut pending = 0usize;
        let mut index = self.trail.len();
        let mut uip: Option<Lit> = None;
        let current = self.decision_level();
        loop {
            let c = self.clauses[conflict as usize];
            let from = if uip.is_some() { 1 } else { 0 };
            for j in from..c.len as usize {
                let q = self.lits[c.start as usize + j];
                let v = q.var();
                if self.seen[v] || self.level[v] == 0 {
                    continue;
                }
                self.seen[v] = true;
                self.bump(v);
                if self.level[v] == current {
                    pending += 1;
                } else {
                    learnt.push(q);
                }
            }
            loop {
                index -= 1;
                if self.seen[self.trail[index].var()] {
                    break;
                }
            }
            let p = self.trail[index];
            self.seen[p.var()] = false;
            pending -= 1;
            uip = Some(p);
            if pending == 0 {
                break;
            }
            conflict = self.reason[p.var()];
        }
        learnt[0] = uip.expect("conflict at a positive level").negate();
        for l in &learnt[1..] {
            self.seen[l.var()] = false;
        }
        let mut back = 0;
        if learnt.len() > 1 {
            let mut best = 1;
            for j in 2..learnt.len() {
                if self.level[learnt[j].var()] > self.level[learnt[best].var()] {
                    best = j;
                }
            }
            learnt.swap(1, best);
            back = self.level[learnt[1].var()];
        }
        (learnt, back)
    }

    fn backjump(&mut self, level: u32) {
        if self.decision_level() <= level {
            return;
        }
        let keep = self.trail_lim[level as usize];
        for i in (keep..self.trail.len()).rev() {
            let lit = self.trail[i];
            let v = lit.var();
            self.phase[v] = !lit.is_negated();
            self.value[v] = UNASSIGNED;
            self.reason[v] = NO_REASON;
            self.heap.insert(v, &self.activity);
        }
        self.trail.truncate(keep);
        self.trail_lim.truncate(level as usize);
        self.qhead = keep;
    }

    fn lbd(&mut self, clause: &[Lit]) -> u32 {
        let mut levels: Vec<u32> = clause.iter().map(|l| self.level[l.var()]).collect();
        levels.sort_unstable();
        levels.dedup();
        levels.len() as u32
    }

    /// Drops the worse half of the learned clauses with LBD above 2. Only
    /// called at level 0, where no learned clause is a live reason.
    fn reduce_learnts(&mut self) {
        let mut ranked: Vec<(u32, u32)> = (0..self.clauses.len() as u32)
            .filter(|&i| self.clauses[i as usize].learnt && self.clauses[i as usize].lbd > 2)
            .map(|i| (self.clauses[i as usize].lbd, i))
            .collect();
        ranked.sort_unstable_by(|a, b| b.cmp(a));
        let mut drop = vec![false; self.clauses.len()];
        for &(_, i) in &ranked[..ranked.len() / 2] {
            drop[i as usize] = true;
        }
        let old_clauses = std::mem::take(&mut self.clauses);
        let old_lits = std::mem::take(&mut self.lits);
        for w in &mut self.watches {
            w.clear();
        }
        for v in 0..self.num_vars {
            self.reason[v] = NO_REASON;
        }
        for (i, c) in old_clauses.iter().enumerate() {
            if !drop[i] {
                let body = &old_lits[c.start as usize..(c.start + c.len) as usize];
                self.attach(body, c.learnt, c.lbd);
            }
        }
    }

    fn num_learnts(&self) -> usize {
        self.clauses.iter().filter(|c| c.learnt).count()
    }

    fn pick_branch(&mut self) -> Option<Lit> {
        while let Some(v) = self.heap.pop(&self.activity) {
            if self.value[v] == UNASSIGNED {
                return Some(Lit::new(v, !self.phase[v]));
            }
        }
        None
    }

    /// Runs the search under `assumptions`; returns the model on success.
    pub fn solve(&mut self, assumptions: &[Lit]) -> Option<Vec<bool>> {
        if self.has_empty {
            return None;
        }
        let roots: Vec<Lit> = self.units.iter().chain(assumptions).copied().collect();
        for lit in roots {
            match self.lit_value(lit) {
                1 => {}
                0 => {
                    self.stats.conflicts += 1;
                    return None;
                }
                _ => self.assign(lit, NO_REASON),
            }
        }
        let mut restart_index = 1u64;
        let mut budget = luby(restart_index) * RESTART_UNIT;
        let mut since_restart = 0u64;
        loop {
            if let Some(conflict) = self.propagate() {
                self.stats.conflicts += 1;
                if self.decision_level() == 0 {
                    return None;
                }
                let (learnt, back) = self.analyze(conflict);
                self.backjump(back);
                if learnt.len() == 1 {
                    self.assign(learnt[0], NO_REASON);
                } else {
                    let lbd = self.lbd(&learnt);
                    let idx = self.attach(&learnt, true, lbd);
                    self.assign(learnt[0], idx);
                }
                self.stats.learned += 1;
                self.var_inc /= VAR_DECAY;
                since_restart += 1;
                continue;
            }
            if since_restart >= budget {
                self.stats.restarts += 1;
                self.backjump(0);
                if self.num_learnts() > self.max_learnts {
                    self.reduce_learnts();
                    self.max_learnts += self.max_learnts / 10;
                }
                restart_index += 1;
                budget = luby(restart_index) * RESTART_UNIT;
                since_restart = 0;
                continue;
            }
            let Some(lit) = self.pick_branch() else {
                return Some(self.value.iter().map(|&v| v == 1).collect());
            };
            self.stats.decisions += 1;
            self.trail_lim.push(self.trail.len());
            self.assign(lit, NO_REASON);
        }
    }
}

/// The Luby sequence 1, 1, 2, 1, 1, 2, 4, ... (1-based).
fn luby(mut i: u64) -> u64 {
    loop {
        let mut k = 1;
        while (1u64 << k) - 1 < i {
            k += 1;
        }
        if (1u64 << k) - 1 == i {
            return 1 << (k - 1);
        }
        i -= (1u64 << (k - 1)) - 1;
    }
}

/// Max-heap of variables by activity; ties go to the lower index.
struct VarHeap {
    heap: Vec<usize>,
    pos: Vec<usize>,
}

const ABSENT: usize = usize::MAX;

impl VarHeap {
    fn new(n: usize) -> Self {
        VarHeap { heap: Vec::with_capacity(n), pos: vec![ABSENT; n] }
    }

    fn before(act: &[f64], a: usize, b: usize) -> bool {
        act[a] > act[b] || (act[a] == act[b] && a < b)
    }

    fn insert(&mut self, v: usize, act: &[f64]) {
        if self.pos[v] != ABSENT {
            return;
        }
        self.pos[v] = self.heap.len();
        self.heap.push(v);
        self.sift_up(self.heap.len() - 1, act);
    }

    fn increased(&mut self, v: usize, act: &[f64]) {
        if self.pos[v] != ABSENT {
            self.sift_up(self.pos[v], act);
        }
    }

    fn pop(&mut self, act: &[f64]) -> Option<usize> {
        let top = *self.heap.first()?;
        let last = self.heap.pop().expect("non-empty heap");
        self.pos[top] = ABSENT;
        if !self.heap.is_empty() {
            self.heap[0] = last;
            self.pos[last] = 0;
            self.sift_down(0, act);
        }
        Some(top)
    }

    fn sift_up(&mut self, mut i: usize, act: &[f64]) {
        let v = self.heap[i];
        while i > 0 {
            let parent = (i - 1) / 2;
            if !Self::before(act, v, self.heap[parent]) {
                break;
            }
            self.heap[i] = self.heap[parent];
            self.pos[self.heap[i]] = i;
            i = parent;
        }
        self.heap[i] = v;
        self.pos[v] = i;
    }

    fn sift_down(&mut self, mut i: usize, act: &[f64]) {
        let v = self.heap[i];
        loop {
            let mut child = 2 * i + 1;
            if child >= self.heap.len() {
                break;
            }
            if child + 1 < self.heap.len() && Self::before(act, self.heap[child + 1], self.heap[child]) {
                child += 1;
            }
            if !Self::before(act, self.heap[child], v) {
                break;
            }
            self.heap[i] = self.heap[child];
            self.pos[self.heap[i]] = i;
            i = child;
        }
        self.heap[i] = v;
        self.pos[v] = i;
    }
}

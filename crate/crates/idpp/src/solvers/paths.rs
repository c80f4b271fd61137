//! Path enumeration over a residual node mask, shared by the exact solvers.

use std::time::Instant;

use crate::graph::{Graph, NodeId};

/// Signals that the solver's deadline passed mid-search.
pub(crate) struct TimeUp;

/// Coarse deadline checker: consults the clock once every few thousand steps
/// so the search loop stays cheap.
pub(crate) struct Ticker {
    deadline: Option<Instant>,
    counter: u32,
}

impl Ticker {
    pub(crate) fn new(deadline: Option<Instant>) -> Self {
        // Start one tick short of a clock check so the very first tick
        // notices an already-expired deadline.
        Ticker {
            deadline,
            counter: 4095,
        }
    }

    pub(crate) fn tick(&mut self) -> Result<(), TimeUp> {
        let Some(deadline) = self.deadline else {
            return Ok(());
        };
        self.counter = self.counter.wrapping_add(1);
        if self.counter.is_multiple_of(4096) && Instant::now() >= deadline {
            return Err(TimeUp);
        }
        Ok(())
    }
}

/// All chordless `source`-`sink` paths whose nodes are all alive, sorted by
/// node count and then lexicographically.
pub(crate) fn chordless_paths(
    g: &Graph,
    alive: &[bool],
    source: NodeId,
    sink: NodeId,
    max_nodes: Option<usize>,
    ticker: &mut Ticker,
) -> Result<Vec<Vec<NodeId>>, TimeUp> {
    let mut search = PathSearch::new(g, alive, sink, max_nodes, true);
    search.run(source, ticker)
}

/// All simple `source`-`sink` paths (chords allowed), same ordering.
pub(crate) fn simple_paths(
    g: &Graph,
    alive: &[bool],
    source: NodeId,
    sink: NodeId,
    max_nodes: Option<usize>,
    ticker: &mut Ticker,
) -> Result<Vec<Vec<NodeId>>, TimeUp> {
    let mut search = PathSearch::new(g, alive, sink, max_nodes, false);
    search.run(source, ticker)
}

struct PathSearch<'a> {
    g: &'a Graph,
    alive: &'a [bool],
    sink: NodeId,
    max_nodes: usize,
    chordless: bool,
    path: Vec<NodeId>,
    on_path: Vec<bool>,
    /// Per node: how many path nodes it is adjacent to. Maintained only for
    /// chordless searches.
    touch: Vec<u32>,
    seen: Vec<u32>,
    stamp: u32,
    queue: Vec<NodeId>,
    found: Vec<Vec<NodeId>>,
}

impl<'a> PathSearch<'a> {
    fn new(
        g: &'a Graph,
        alive: &'a [bool],
        sink: NodeId,
        max_nodes: Option<usize>,
        chordless: bool,
    ) -> Self {
        let n = g.node_count();
        PathSearch {
            g,
            alive,
            sink,
            max_nodes: max_nodes.unwrap_or(n),
            chordless,
            path: Vec::new(),
            on_path: vec![false; n],
            touch: vec![0; n],
            seen: vec![0; n],
            stamp: 0,
            queue: Vec::new(),
            found: Vec::new(),
        }
    }

    fn run(&mut self, source: NodeId, ticker: &mut Ticker) -> Result<Vec<Vec<NodeId>>, TimeUp> {
        if !self.alive[source] || !self.alive[self.sink] {
            return Ok(Vec::new());
        }
        self.push(source);
        self.extend(ticker)?;
        let mut found = std::mem::take(&mut self.found);
        found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(found)
    }

    fn push(&mut self, v: NodeId) {
        self.path.push(v);
        self.on_path[v] = true;
        if self.chordless {
            for &w in self.g.neighbors(v) {
                self.touch[w] += 1;
            }
        }
    }

    fn pop(&mut self) {
        let v = self.path.pop().expect("pop matches a push");
        self.on_path[v] = false;
        if self.chordless {
            for &w in self.g.neighbors(v) {
                self.touch[w] -= 1;
            }
        }
    }

    /// A node may extend the current path exactly when it is alive, unused,
    /// adjacent to the path head, and (for chordless search) adjacent to no
    /// other path node.
    fn extendable(&self, w: NodeId) -> bool {
        self.alive[w] && !self.on_path[w] && (!self.chordless || self.touch[w] == 1)
    }

    /// Any node that can still appear later in the path: for chordless search
    /// it must avoid every path node except possibly the head.
    fn future_candidate(&self, w: NodeId, head: NodeId) -> bool {
        if !self.alive[w] || self.on_path[w] {
            return false;
        }
        if !self.chordless {
            return true;
        }
        let expected = u32::from(self.g.adjacent(w, head));
        self.touch[w] == expected
    }

    /// BFS over future candidates: can the sink still be reached from the
    /// path head? Sound to prune on, since every legal completion consists of
    /// future candidates only.
    fn sink_reachable(&mut self, head: NodeId) -> bool {
        self.stamp += 1;
        let stamp = self.stamp;
        self.queue.clear();
        self.seen[head] = stamp;
        self.queue.push(head);
        let mut i = 0;
        while i < self.queue.len() {
            let u = self.queue[i];
            i += 1;
            for &w in self.g.neighbors(u) {
                if self.seen[w] == stamp || !self.future_candidate(w, head) {
                    continue;
                }
                if w == self.sink {
                    return true;
                }
                self.seen[w] = stamp;
                self.queue.push(w);
            }
        }
        false
    }

    fn extend(&mut self, ticker: &mut Ticker) -> Result<(), TimeUp> {
        ticker.tick()?;
        let head = *self.path.last().expect("path never empty here");
        if head == self.sink {
            self.found.push(self.path.clone());
            return Ok(());
        }
        if self.path.len() >= self.max_nodes || !self.sink_reachable(head) {
            return Ok(());
        }
        let neighbors = self.g.neighbors(head).to_vec();
        for w in neighbors {
            if self.extendable(w) {
                self.push(w);
                self.extend(ticker)?;
                self.pop();
            }
        }
        Ok(())
    }
}

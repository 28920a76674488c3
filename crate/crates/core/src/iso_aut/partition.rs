//! Ordered partitions of a vertex set and equitable refinement.
//!
//! Cells are contiguous runs of `order`, identified by their start position.
//! Every step depends only on positions and neighbour counts, so two
//! partitions that correspond under an isomorphism refine identically and
//! produce identical trace hashes.

use std::collections::VecDeque;

use crate::graph_core::SimpleGraph;

#[derive(Clone, Debug)]
pub(crate) struct Partition {
    /// Vertices in cell order.
    pub order: Vec<u32>,
    /// Start position of the cell containing each vertex.
    cell_of: Vec<u32>,
    /// Cell length, meaningful at start positions only.
    cell_len: Vec<u32>,
    cells: usize,
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h.rotate_left(7) ^ x).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Scratch space reused across refinements of one graph.
pub(crate) struct Refiner<'g> {
    graph: &'g SimpleGraph,
    counts: Vec<u32>,
    touched: Vec<u32>,
    in_queue: Vec<bool>,
}

impl<'g> Refiner<'g> {
    pub fn new(graph: &'g SimpleGraph) -> Self {
        let n = graph.vertex_count();
        Refiner {
            graph,
            counts: vec![0; n],
            touched: Vec::new(),
            in_queue: vec![false; n],
        }
    }

    /// The unit partition refined to equitability, with its trace.
    pub fn root(&mut self) -> (Partition, u64) {
        let n = self.graph.vertex_count();
        let mut p = Partition {
            order: (0..n as u32).collect(),
            cell_of: vec![0; n],
            cell_len: vec![0; n.max(1)],
            cells: usize::from(n > 0),
        };
        if n == 0 {
            return (p, 0);
        }
        p.cell_len[0] = n as u32;
        let trace = self.refine(&mut p, &[0]);
        (p, trace)
    }

    /// Splits `v` off its cell as a singleton placed first, then refines.
    pub fn individualize(&mut self, p: &mut Partition, v: u32) -> u64 {
        let start = p.cell_of[v as usize];
        let len = p.cell_len[start as usize];
        debug_assert!(len > 1);
        let at = p.order[start as usize..(start + len) as usize]
            .iter()
            .position(|&x| x == v)
            .unwrap();
        p.order.swap(start as usize, start as usize + at);
        p.cell_len[start as usize] = 1;
        p.cell_len[start as usize + 1] = len - 1;
        for k in start + 1..start + len {
            let w = p.order[k as usize];
            p.cell_of[w as usize] = start + 1;
        }
        p.cells += 1;
        mix(self.refine(p, &[start]), u64::from(start))
    }

    fn refine(&mut self, p: &mut Partition, initial: &[u32]) -> u64 {
        let g = self.graph;
        let mut trace = 0x5555_5555_u64;
        let mut queue: VecDeque<u32> = VecDeque::new();
        for &s in initial {
            queue.push_back(s);
            self.in_queue[s as usize] = true;
        }
        let mut splitter = Vec::new();
        let mut cells = Vec::new();
        while let Some(s) = queue.pop_front() {
            self.in_queue[s as usize] = false;
            splitter.clear();
            splitter.extend_from_slice(&p.order[s as usize..(s + p.cell_len[s as usize]) as usize]);
            for &v in &splitter {
                for &w in g.neighbors(v as usize) {
                    if self.counts[w as usize] == 0 {
                        self.touched.push(w);
                    }
                    self.counts[w as usize] += 1;
                }
            }
            cells.clear();
            cells.extend(self.touched.iter().map(|&w| p.cell_of[w as usize]));
            cells.sort_unstable();
            cells.dedup();
            for &c in &cells {
                let len = p.cell_len[c as usize];
                let range = c as usize..(c + len) as usize;
                let counts = &self.counts;
                let members = &mut p.order[range.clone()];
                members.sort_unstable_by_key(|&w| counts[w as usize]);
                let lo = counts[members[0] as usize];
                let hi = counts[members[members.len() - 1] as usize];
                trace = mix(mix(mix(trace, u64::from(s)), u64::from(c)), u64::from(lo));
                if lo == hi {
                    continue;
                }
                // split into runs of equal count, ascending
                let was_queued = self.in_queue[c as usize];
                let mut run_start = c;
                for k in c..c + len {
                    let w = p.order[k as usize];
                    let next_differs = k + 1 == c + len
                        || counts[p.order[k as usize + 1] as usize] != counts[w as usize];
                    p.cell_of[w as usize] = run_start;
                    if next_differs {
                        let run_len = k + 1 - run_start;
                        p.cell_len[run_start as usize] = run_len;
                        trace = mix(mix(trace, u64::from(counts[w as usize])), u64::from(run_len));
                        if run_start != c {
                            p.cells += 1;
                        }
                        if !self.in_queue[run_start as usize] && (run_start != c || !was_queued) {
                            self.in_queue[run_start as usize] = true;
                            queue.push_back(run_start);
                        }
                        run_start = k + 1;
                    }
                }
            }
            for &w in &self.touched {
                self.counts[w as usize] = 0;
            }
            self.touched.clear();
        }
        mix(trace, p.cells as u64)
    }
}

impl Partition {
    pub fn is_discrete(&self) -> bool {
        self.cells == self.order.len()
    }

    /// Start of the first cell of maximum size, if any cell is non-singleton.
    pub fn target_cell(&self) -> Option<u32> {
        let mut best: Option<(u32, u32)> = None;
        let mut k = 0u32;
        while (k as usize) < self.order.len() {
            let len = self.cell_len[k as usize];
            if len > 1 && best.is_none_or(|(_, l)| len > l) {
                best = Some((k, len));
            }
            k += len;
        }
        best.map(|(s, _)| s)
    }

    pub fn cell(&self, start: u32) -> &[u32] {
        &self.order[start as usize..(start + self.cell_len[start as usize]) as usize]
    }

    pub fn cell_sorted(&self, start: u32) -> Vec<u32> {
        let mut c = self.cell(start).to_vec();
        c.sort_unstable();
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_core::{cycle_graph, hypercube, path_graph};

    #[test]
    fn root_partition_splits_by_degree() {
        let g = path_graph(4);
        let mut r = Refiner::new(&g);
        let (p, _) = r.root();
        // ends (degree 1) before middles (degree 2)
        let first = p.target_cell().unwrap();
        assert_eq!(p.cell_sorted(first), vec![0, 3]);
        assert!(!p.is_discrete());
    }

    #[test]
    fn traces_agree_under_relabeling() {
        let g = hypercube(4).without_labels();
        let perm: Vec<u32> = (0..16u32).map(|v| (v * 7 + 3) % 16).collect();
        let h = g.relabel(&perm);
        let (mut pg, tg) = Refiner::new(&g).root();
        let (mut ph, th) = Refiner::new(&h).root();
        assert_eq!(tg, th);
        let a = Refiner::new(&g).individualize(&mut pg, 5);
        let b = Refiner::new(&h).individualize(&mut ph, perm[5]);
        assert_eq!(a, b);
    }

    #[test]
    fn individualizing_on_a_cycle_discretizes_halfway() {
        let g = cycle_graph(6);
        let mut r = Refiner::new(&g);
        let (mut p, _) = r.root();
        r.individualize(&mut p, 0);
        // distance classes {0}, {1,5}, {2,4}, {3}
        assert_eq!(p.cells, 4);
        let c = p.target_cell().unwrap();
        let v = p.cell_sorted(c)[0];
        r.individualize(&mut p, v);
        assert!(p.is_discrete());
    }
}

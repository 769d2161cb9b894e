use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// An ordered partition of the vertex set. Cell order matters: the
/// refinement and the search both address cells by position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    cells: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn from_cells(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for cell in &cells {
            if cell.is_empty() {
                return Err(Error::Precondition(
                    "partition cells must be non-empty".into(),
                ));
            }
            for &v in cell {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Precondition(format!(
                        "vertex {v} repeated or out of range"
                    )));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Precondition(format!(
                "vertex {v} missing from partition"
            )));
        }
        Ok(OrderedPartition { cells })
    }

    pub fn unit(n: usize) -> Self {
        OrderedPartition {
            cells: vec![(0..n).collect()],
        }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    pub fn n_vertices(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }
}

/// Coarsest equitable refinement of `p`.
pub fn equitable_refinement(g: &Graph, p: &OrderedPartition) -> Result<OrderedPartition> {
    if p.n_vertices() != g.n_vertices() {
        return Err(Error::LengthMismatch {
            expected: g.n_vertices(),
            found: p.n_vertices(),
        });
    }
    let mut work = Partition::from_ordered(p);
    work.refine_all(g);
    Ok(work.to_ordered())
}

/// Working partition used by the search. Cells occupy contiguous ranges of
/// `lab`; a cell is named by its start position, which never changes when
/// other cells split.
#[derive(Clone, Debug)]
pub(crate) struct Partition {
    pub(crate) lab: Vec<usize>,
    /// `cell_end[s]` is one past the last position of the cell starting at `s`.
    cell_end: Vec<usize>,
    /// Start position of the cell holding each vertex.
    cell_of: Vec<usize>,
    n_cells: usize,
}

const MIX: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(h: u64, x: u64) -> u64 {
    (h ^ x
        .wrapping_add(MIX)
        .wrapping_add(h << 6)
        .wrapping_add(h >> 2))
    .wrapping_mul(0xff51_afd7_ed55_8ccd)
}

impl Partition {
    pub(crate) fn from_ordered(p: &OrderedPartition) -> Self {
        let n = p.n_vertices();
        let mut lab = Vec::with_capacity(n);
        let mut cell_end = vec![0; n];
        let mut cell_of = vec![0; n];
        for cell in p.cells() {
            let start = lab.len();
            for &v in cell {
                cell_of[v] = start;
                lab.push(v);
            }
            cell_end[start] = lab.len();
        }
        Partition {
            lab,
            cell_end,
            cell_of,
            n_cells: p.cells().len(),
        }
    }

    pub(crate) fn to_ordered(&self) -> OrderedPartition {
        let cells = self
            .cell_starts()
            .map(|s| self.lab[s..self.cell_end[s]].to_vec())
            .collect();
        OrderedPartition { cells }
    }

    pub(crate) fn cell_starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut s = 0;
        std::iter::from_fn(move || {
            (s < self.lab.len()).then(|| {
                let start = s;
                s = self.cell_end[start];
                start
            })
        })
    }

    pub(crate) fn cell(&self, start: usize) -> &[usize] {
        &self.lab[start..self.cell_end[start]]
    }

    pub(crate) fn is_discrete(&self) -> bool {
        self.n_cells == self.lab.len()
    }

    /// First smallest non-singleton cell, by position.
    pub(crate) fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for s in self.cell_starts() {
            let size = self.cell_end[s] - s;
            if size > 1 && best.is_none_or(|(_, b)| size < b) {
                best = Some((s, size));
                if size == 2 {
                    break;
                }
            }
        }
        best.map(|(s, _)| s)
    }

    /// Cell-boundary shape; equal for partitions related by an automorphism.
    pub(crate) fn shape(&self) -> Vec<usize> {
        self.cell_starts().map(|s| self.cell_end[s]).collect()
    }

    /// Splits `v` off the front of its cell and refines. Returns the
    /// refinement trace.
    pub(crate) fn individualize(&mut self, g: &Graph, v: usize) -> u64 {
        let start = self.cell_of[v];
        let end = self.cell_end[start];
        debug_assert!(end - start > 1);
        let pos = start
            + self.lab[start..end]
                .iter()
                .position(|&x| x == v)
                .expect("vertex in its cell");
        self.lab.swap(start, pos);
        self.cell_end[start] = start + 1;
        self.cell_end[start + 1] = end;
        for &x in &self.lab[start + 1..end] {
            self.cell_of[x] = start + 1;
        }
        self.n_cells += 1;
        self.refine(g, VecDeque::from([start]))
    }

    pub(crate) fn refine_all(&mut self, g: &Graph) -> u64 {
        let queue: VecDeque<usize> = self.cell_starts().collect();
        self.refine(g, queue)
    }

    /// Splits cells by neighbour counts into splitter cells until equitable.
    /// Every decision depends only on cell positions and counts, so the
    /// refinement commutes with automorphisms that respect the input.
    fn refine(&mut self, g: &Graph, mut queue: VecDeque<usize>) -> u64 {
        let n = self.lab.len();
        let mut in_queue = vec![false; n];
        for &s in &queue {
            in_queue[s] = true;
        }
        let mut counts = vec![0u32; n];
        let mut touched_cells: Vec<usize> = Vec::new();
        let mut touched_flag = vec![false; n];
        let mut trace = 0u64;
        while let Some(splitter) = queue.pop_front() {
            in_queue[splitter] = false;
            if self.is_discrete() {
                break;
            }
            let end = self.cell_end[splitter];
            touched_cells.clear();
            let mut touched_vertices: Vec<usize> = Vec::new();
            for pos in splitter..end {
                let w = self.lab[pos];
                for v in g.neighbors(w) {
                    if counts[v] == 0 {
                        touched_vertices.push(v);
                        let c = self.cell_of[v];
                        if !touched_flag[c] {
                            touched_flag[c] = true;
                            touched_cells.push(c);
                        }
                    }
                    counts[v] += 1;
                }
            }
            touched_cells.sort_unstable();
            trace = mix(trace, splitter as u64);
            for &cell in &touched_cells {
                touched_flag[cell] = false;
                let cend = self.cell_end[cell];
                if cend - cell == 1 {
                    trace = mix(trace, counts[self.lab[cell]] as u64);
                    continue;
                }
                let slice = &mut self.lab[cell..cend];
                slice.sort_by_key(|&v| counts[v]);
                let first = counts[slice[0]];
                let last = counts[slice[slice.len() - 1]];
                if first == last {
                    trace = mix(trace, ((cell as u64) << 32) | first as u64);
                    continue;
                }
                // split into runs of equal count
                let mut fragments = Vec::new();
                let mut run_start = cell;
                for pos in cell + 1..=cend {
                    if pos == cend || counts[self.lab[pos]] != counts[self.lab[pos - 1]] {
                        fragments.push((run_start, pos, counts[self.lab[run_start]]));
                        run_start = pos;
                    }
                }
                for &(fs, fe, c) in &fragments {
                    self.cell_end[fs] = fe;
                    for &v in &self.lab[fs..fe] {
                        self.cell_of[v] = fs;
                    }
                    trace = mix(trace, ((fs as u64) << 40) ^ ((fe as u64) << 20) ^ c as u64);
                }
                self.n_cells += fragments.len() - 1;
                if in_queue[cell] {
                    for &(fs, _, _) in &fragments[1..] {
                        in_queue[fs] = true;
                        queue.push_back(fs);
                    }
                } else {
                    // all fragments but the first largest
                    let largest = fragments
                        .iter()
                        .enumerate()
                        .max_by(|a, b| {
                            (a.1 .1 - a.1 .0)
                                .cmp(&(b.1 .1 - b.1 .0))
                                .then(b.0.cmp(&a.0))
                        })
                        .map(|(i, _)| i)
                        .unwrap_or(0);
                    for (i, &(fs, _, _)) in fragments.iter().enumerate() {
                        if i != largest {
                            in_queue[fs] = true;
                            queue.push_back(fs);
                        }
                    }
                }
            }
            for v in touched_vertices {
                counts[v] = 0;
            }
        }
        trace
    }
}

//! HLT-style Todd-Coxeter coset enumeration over the trivial subgroup.
//!
//! Cosets are scanned in creation order against the relators in their given
//! order; gaps are filled by defining new cosets, and coincidences are merged
//! through a union-find with a deduction queue. The result (when the table
//! closes within the coset bound) is the regular representation of the
//! presented group, renumbered by a breadth-first scan from the identity so
//! the output is canonical no matter how the enumeration meandered.

use std::collections::VecDeque;

use super::{GroupSpec, GroupTable, Presentation};
use crate::error::Error;
use crate::Result;

/// Enumerate the presented group; errors with
/// [`Error::EnumerationDidNotClose`] if the coset bound is exhausted, which
/// signals either an infinite group or an insufficient bound.
pub fn todd_coxeter(pres: &Presentation) -> Result<GroupTable> {
    pres.validate()?;
    let mut machine = Machine::new(pres);
    machine.run()?;
    machine.into_table(pres)
}

struct Machine {
    cols: usize,
    /// table[coset][col]; columns alternate generator, inverse.
    table: Vec<Vec<Option<u32>>>,
    /// Union-find representative per coset.
    rep: Vec<u32>,
    bound: usize,
    relators: Vec<Vec<usize>>,
    live: usize,
}

fn col_of(letter: i32) -> usize {
    if letter > 0 {
        2 * (letter as usize - 1)
    } else {
        2 * ((-letter) as usize - 1) + 1
    }
}

enum Scan {
    Complete,
    Restart,
}

impl Machine {
    fn new(pres: &Presentation) -> Self {
        let cols = 2 * pres.generator_count;
        let relators = pres
            .relators
            .iter()
            .map(|w| w.iter().map(|&l| col_of(l)).collect())
            .collect();
        Machine {
            cols,
            table: vec![vec![None; cols]],
            rep: vec![0],
            bound: pres.coset_bound,
            relators,
            live: 1,
        }
    }

    fn find(&mut self, x: u32) -> u32 {
        let mut root = x;
        while self.rep[root as usize] != root {
            root = self.rep[root as usize];
        }
        let mut cur = x;
        while self.rep[cur as usize] != cur {
            let next = self.rep[cur as usize];
            self.rep[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn lookup(&mut self, coset: u32, col: usize) -> Option<u32> {
        let c = self.find(coset);
        self.table[c as usize][col].map(|t| self.find(t))
    }

    fn define(&mut self, from: u32, col: usize) -> Result<u32> {
        if self.table.len() >= self.bound {
            return Err(Error::EnumerationDidNotClose { bound: self.bound });
        }
        let new = self.table.len() as u32;
        self.table.push(vec![None; self.cols]);
        self.rep.push(new);
        self.live += 1;
        let from = self.find(from);
        self.table[from as usize][col] = Some(new);
        self.table[new as usize][col ^ 1] = Some(from);
        Ok(new)
    }

    /// Record a forced equality between two cosets and propagate it.
    fn coincidence(&mut self, a: u32, b: u32) {
        let mut dead = VecDeque::new();
        self.merge(a, b, &mut dead);
        while let Some(kill) = dead.pop_front() {
            for col in 0..self.cols {
                let Some(target) = self.table[kill as usize][col].take() else {
                    continue;
                };
                let target = self.find(target);
                let keep = self.find(kill);
                match self.table[keep as usize][col] {
                    None => {
                        self.table[keep as usize][col] = Some(target);
                        match self.table[target as usize][col ^ 1] {
                            None => self.table[target as usize][col ^ 1] = Some(keep),
                            Some(back) => {
                                let back = self.find(back);
                                self.table[target as usize][col ^ 1] = Some(keep);
                                if back != keep {
                                    self.merge(back, keep, &mut dead);
                                }
                            }
                        }
                    }
                    Some(existing) => {
                        let existing = self.find(existing);
                        if existing != target {
                            self.merge(existing, target, &mut dead);
                        }
                    }
                }
            }
        }
    }

    fn merge(&mut self, a: u32, b: u32, dead: &mut VecDeque<u32>) {
        let a = self.find(a);
        let b = self.find(b);
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.rep[kill as usize] = keep;
        self.live -= 1;
        dead.push_back(kill);
    }

    /// Scan one relator from `alpha`, filling gaps with new cosets.
    fn scan_and_fill(&mut self, alpha: u32, rel_idx: usize) -> Result<Scan> {
        let rel = self.relators[rel_idx].clone();
        let alpha = self.find(alpha);
        let mut f = alpha;
        let mut i = 0usize;
        let mut b = alpha;
        let mut j = rel.len();
        loop {
            while i < j {
                match self.lookup(f, rel[i]) {
                    Some(next) => {
                        f = next;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                    return Ok(Scan::Restart);
                }
                return Ok(Scan::Complete);
            }
            while j > i {
                match self.lookup(b, rel[j - 1] ^ 1) {
                    Some(prev) => {
                        b = prev;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j == i {
                // Both scans meet at the same position; the cosets must agree.
                if f != b {
                    self.coincidence(f, b);
                    return Ok(Scan::Restart);
                }
                return Ok(Scan::Complete);
            }
            if j == i + 1 {
                // Deduction closes the cycle.
                let ff = self.find(f);
                let bb = self.find(b);
                match self.table[ff as usize][rel[i]] {
                    Some(existing) => {
                        let existing = self.find(existing);
                        if existing != bb {
                            self.coincidence(existing, bb);
                            return Ok(Scan::Restart);
                        }
                    }
                    None => {
                        self.table[ff as usize][rel[i]] = Some(bb);
                        match self.table[bb as usize][rel[i] ^ 1] {
                            None => self.table[bb as usize][rel[i] ^ 1] = Some(ff),
                            Some(back) => {
                                let back = self.find(back);
                                self.table[bb as usize][rel[i] ^ 1] = Some(ff);
                                if back != ff {
                                    self.coincidence(back, ff);
                                    return Ok(Scan::Restart);
                                }
                            }
                        }
                    }
                }
                return Ok(Scan::Complete);
            }
            // Gap of two or more: fill the front and keep scanning.
            self.define(f, rel[i])?;
        }
    }

    fn run(&mut self) -> Result<()> {
        let mut alpha = 0u32;
        while (alpha as usize) < self.table.len() {
            if self.find(alpha) != alpha {
                alpha += 1;
                continue;
            }
            for r in 0..self.relators.len() {
                loop {
                    if self.find(alpha) != alpha {
                        break; // coset died mid-scan
                    }
                    match self.scan_and_fill(alpha, r)? {
                        Scan::Complete => break,
                        Scan::Restart => continue,
                    }
                }
                if self.find(alpha) != alpha {
                    break;
                }
            }
            if self.find(alpha) == alpha {
                for col in 0..self.cols {
                    if self.lookup(alpha, col).is_none() {
                        self.define(alpha, col)?;
                    }
                }
            }
            alpha += 1;
        }
        self.verify_closed()
    }

    /// Post-condition check: the live table is complete and every relator
    /// fixes every live coset.
    fn verify_closed(&mut self) -> Result<()> {
        let live: Vec<u32> = (0..self.table.len() as u32)
            .filter(|&c| self.find(c) == c)
            .collect();
        for &c in &live {
            for col in 0..self.cols {
                if self.lookup(c, col).is_none() {
                    return Err(Error::BadTable("coset table did not complete".into()));
                }
            }
            for r in 0..self.relators.len() {
                let rel = self.relators[r].clone();
                let mut cur = c;
                for col in rel {
                    cur = self.lookup(cur, col).unwrap();
                }
                if cur != c {
                    return Err(Error::BadTable("relator does not fix a coset".into()));
                }
            }
        }
        Ok(())
    }

    /// Renumber live cosets breadth-first from the identity and convert the
    /// regular representation into a multiplication table with word labels.
    fn into_table(mut self, pres: &Presentation) -> Result<GroupTable> {
        let gens = pres.generator_count;
        let root = self.find(0);
        let mut new_id = vec![usize::MAX; self.table.len()];
        let mut order_of: Vec<u32> = Vec::new();
        let mut words: Vec<Vec<usize>> = Vec::new();
        new_id[root as usize] = 0;
        order_of.push(root);
        words.push(Vec::new());
        let mut head = 0;
        while head < order_of.len() {
            let c = order_of[head];
            for g in 0..gens {
                let t = self.lookup(c, 2 * g).expect("table is closed");
                if new_id[t as usize] == usize::MAX {
                    new_id[t as usize] = order_of.len();
                    let mut w = words[head].clone();
                    w.push(g);
                    order_of.push(t);
                    words.push(w);
                }
            }
            head += 1;
        }
        let n = order_of.len();
        debug_assert_eq!(n, self.live);

        let labels: Vec<String> = words.iter().map(|w| word_label(w)).collect();
        let mut mul = vec![0u16; n * n];
        for i in 0..n {
            let start = order_of[i];
            for (j, w) in words.iter().enumerate() {
                let mut cur = start;
                for &g in w {
                    cur = self.lookup(cur, 2 * g).expect("table is closed");
                }
                mul[i * n + j] = new_id[cur as usize] as u16;
            }
        }
        GroupTable::from_raw(n, mul, labels, GroupSpec::Presentation(pres.clone()))
    }
}

fn gen_name(g: usize) -> String {
    if g < 26 {
        ((b'a' + g as u8) as char).to_string()
    } else {
        format!("g{g}")
    }
}

/// Render a positive word as "a^2 b"; the empty word is "1".
fn word_label(word: &[usize]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut run_gen = word[0];
    let mut run_len = 0usize;
    for &g in word.iter().chain(std::iter::once(&usize::MAX)) {
        if g == run_gen {
            run_len += 1;
            continue;
        }
        let name = gen_name(run_gen);
        parts.push(if run_len == 1 {
            name
        } else {
            format!("{name}^{run_len}")
        });
        run_gen = g;
        run_len = 1;
    }
    parts.join(" ")
}

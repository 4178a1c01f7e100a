//! Small-order isomorphism testing by generator-image backtracking.

use super::GroupTable;
use crate::error::Error;
use crate::Result;

/// Bound under which the brute-force search is complete and fast; the
/// workbench only ever tests central quotients, all of order <= 64.
pub const ISO_BOUND: usize = 64;

/// Sound and complete isomorphism test for groups of order <= 64.
pub fn iso_check_small(g: &GroupTable, h: &GroupTable) -> Result<bool> {
    if g.order() != h.order() {
        return Ok(false);
    }
    if g.order() > ISO_BOUND {
        return Err(Error::SizeBound {
            what: "isomorphism check order",
            got: g.order(),
            bound: ISO_BOUND,
        });
    }
    let g_profile = g.order_profile();
    if g_profile != h.order_profile() {
        return Ok(false);
    }
    if g.center().len() != h.center().len() {
        return Ok(false);
    }
    if g.conjugacy_class_count() != h.conjugacy_class_count() {
        return Ok(false);
    }
    // Finite abelian groups are determined by their element-order multiset.
    if g.is_abelian() {
        return Ok(h.is_abelian());
    }
    if h.is_abelian() {
        return Ok(false);
    }

    let gens = generating_sequence(g);
    let g_orders: Vec<usize> = gens.iter().map(|&x| g.element_order(x)).collect();
    let h_orders: Vec<usize> = (0..h.order()).map(|x| h.element_order(x)).collect();
    let mut images = vec![0usize; gens.len()];
    Ok(assign(g, h, &gens, &g_orders, &h_orders, &mut images, 0))
}

/// Deterministic generating sequence, preferring high-order elements so the
/// image search stays shallow.
fn generating_sequence(g: &GroupTable) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut generated = vec![false; g.order()];
    generated[g.identity()] = true;
    let mut count = 1;
    while count < g.order() {
        let next = (0..g.order())
            .filter(|&x| !generated[x])
            .max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x)))
            .unwrap();
        gens.push(next);
        let mut queue: Vec<usize> = (0..g.order()).filter(|&x| generated[x]).collect();
        while let Some(x) = queue.pop() {
            for &gen in &gens {
                let y = g.mul(x, gen);
                if !generated[y] {
                    generated[y] = true;
                    count += 1;
                    queue.push(y);
                }
            }
        }
    }
    gens
}

fn subgroup_size(g: &GroupTable, seed: &[usize]) -> usize {
    let mut member = vec![false; g.order()];
    member[g.identity()] = true;
    let mut count = 1;
    let mut queue = vec![g.identity()];
    while let Some(x) = queue.pop() {
        for &s in seed {
            let y = g.mul(x, s);
            if !member[y] {
                member[y] = true;
                count += 1;
                queue.push(y);
            }
        }
    }
    count
}

fn assign(
    g: &GroupTable,
    h: &GroupTable,
    gens: &[usize],
    g_orders: &[usize],
    h_orders: &[usize],
    images: &mut [usize],
    depth: usize,
) -> bool {
    if depth == gens.len() {
        return extends_to_isomorphism(g, h, gens, images);
    }
    let want = g_orders[depth];
    let partial_size = subgroup_size(g, &gens[..=depth]);
    for cand in 0..h.order() {
        if h_orders[cand] != want {
            continue;
        }
        images[depth] = cand;
        if subgroup_size(h, &images[..=depth]) != partial_size {
            continue;
        }
        if assign(g, h, gens, g_orders, h_orders, images, depth + 1) {
            return true;
        }
    }
    false
}

/// Build the map forced by the generator images and verify it is a bijective
/// homomorphism on the full table.
fn extends_to_isomorphism(g: &GroupTable, h: &GroupTable, gens: &[usize], images: &[usize]) -> bool {
    let n = g.order();
    let mut phi = vec![usize::MAX; n];
    phi[g.identity()] = h.identity();
    let mut queue = vec![g.identity()];
    while let Some(x) = queue.pop() {
        for (k, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            let im = h.mul(phi[x], images[k]);
            if phi[y] == usize::MAX {
                phi[y] = im;
                queue.push(y);
            } else if phi[y] != im {
                return false;
            }
        }
    }
    if phi.contains(&usize::MAX) {
        return false;
    }
    let mut hit = vec![false; n];
    for &v in &phi {
        if hit[v] {
            return false;
        }
        hit[v] = true;
    }
    for x in 0..n {
        for y in 0..n {
            if phi[g.mul(x, y)] != h.mul(phi[x], phi[y]) {
                return false;
            }
        }
    }
    true
}

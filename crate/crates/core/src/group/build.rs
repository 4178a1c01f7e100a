//! Structural constructors for every catalog family.

use super::todd_coxeter::todd_coxeter;
use super::{direct_product, ExtraspecialKind, GroupSpec, GroupTable, Presentation};
use crate::error::Error;
use crate::gf::{self, FieldSpec};
use crate::Result;

/// Realize a [`GroupSpec`] as a validated multiplication table.
pub fn build(spec: &GroupSpec) -> Result<GroupTable> {
    match spec {
        GroupSpec::Dihedral { m } => {
            require(*m >= 3, "dihedral needs m >= 3")?;
            semidirect_cyclic(*m, 2, m - 1, spec.clone())
        }
        GroupSpec::GeneralizedQuaternion { m } => generalized_quaternion(*m),
        GroupSpec::Quasidihedral { n } => {
            require(*n >= 4, "quasidihedral needs n >= 4")?;
            semidirect_cyclic(1 << (n - 1), 2, (1 << (n - 2)) - 1, spec.clone())
        }
        GroupSpec::Metacyclic { m, n } => {
            require(*m > 2, "metacyclic needs m > 2")?;
            require(*n >= 1, "metacyclic needs n >= 1")?;
            semidirect_cyclic(*m, 2 * n, m - 1, spec.clone())
        }
        // Sz(2) = <a, b : a^5 = b^4 = 1, b^-1 a b = a^2>, i.e. b a b^-1 = a^3.
        GroupSpec::SuzukiSz2 => semidirect_cyclic(5, 4, 3, spec.clone()),
        GroupSpec::FrobeniusPQ { p, q } => {
            require(gf::is_prime(*p as u64), "p must be prime")?;
            require(gf::is_prime(*q as u64), "q must be prime")?;
            require((*q - 1) % *p == 0, "p must divide q - 1")?;
            let w = (2..*q)
                .find(|&r| pow_mod(r, *p, *q) == 1)
                .expect("p | q-1 guarantees an element of order p");
            semidirect_cyclic(*q, *p, w, spec.clone())
        }
        GroupSpec::Psl2 { k } => psl2(*k),
        GroupSpec::Gl2 { q } => gl2(*q),
        GroupSpec::HanakiU { n } => hanaki_u(*n),
        GroupSpec::HanakiV { p, n } => {
            let field = gf::find_irreducible(*p, *n)?;
            hanaki_v(field, GroupSpec::HanakiV { p: *p, n: *n })
        }
        GroupSpec::M16 => semidirect_cyclic(8, 2, 5, spec.clone()),
        GroupSpec::Z4SemidirectZ4 => semidirect_cyclic(4, 4, 3, spec.clone()),
        GroupSpec::D8StarZ4 => d8_star_z4(),
        GroupSpec::Sg16_3 => sg16_3(),
        GroupSpec::ExtraspecialP3 { p, kind } => {
            require(gf::is_prime(*p as u64) && *p % 2 == 1, "p must be an odd prime")?;
            match kind {
                ExtraspecialKind::ExponentPSquared => {
                    semidirect_cyclic(p * p, *p, 1 + p, spec.clone())
                }
                ExtraspecialKind::ExponentP => {
                    let field = gf::find_irreducible(*p, 1)?;
                    hanaki_v(field, spec.clone())
                }
            }
        }
        GroupSpec::Cyclic { k } => cyclic(*k),
        GroupSpec::DirectProduct(a, b) => {
            let ga = build(a)?;
            let gb = build(b)?;
            direct_product(&ga, &gb)
        }
        GroupSpec::Presentation(p) => todd_coxeter(p),
        GroupSpec::Quotient { .. } => Err(Error::InvalidParameter(
            "quotient specs are construction echoes, not recipes".into(),
        )),
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

fn pow_mod(base: u32, exp: u32, modulus: u32) -> u32 {
    let mut acc = 1u64;
    let mut b = base as u64 % modulus as u64;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % modulus as u64;
        }
        b = b * b % modulus as u64;
        e >>= 1;
    }
    acc as u32
}

fn pow_label(gen: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(gen.to_string()),
        _ => Some(format!("{gen}^{e}")),
    }
}

fn join_label(parts: Vec<Option<String>>) -> String {
    let parts: Vec<String> = parts.into_iter().flatten().collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

/// <a, b : a^m = b^k = 1, b a b^-1 = a^w> with elements a^i b^j ordered
/// lexicographically on (i, j).
fn semidirect_cyclic(m: u32, k: u32, w: u32, spec: GroupSpec) -> Result<GroupTable> {
    require(m >= 1 && k >= 1, "cyclic factors must be nontrivial")?;
    let w = w % m.max(1);
    require(gcd(w, m) == 1, "action exponent must be a unit mod m")?;
    require(pow_mod(w, k, m.max(1)) % m.max(1) == 1 % m.max(1), "w^k must be 1 mod m")?;
    let (m, k) = (m as usize, k as usize);
    // w^j mod m for each power of b.
    let mut wpow = vec![1u64; k];
    for j in 1..k {
        wpow[j] = wpow[j - 1] * w as u64 % m as u64;
    }
    let order = m * k;
    let mut labels = Vec::with_capacity(order);
    for i in 0..m {
        for j in 0..k {
            labels.push(join_label(vec![
                pow_label("a", i as u32),
                pow_label("b", j as u32),
            ]));
        }
    }
    GroupTable::from_mul_fn(order, labels, spec, |x, y| {
        let (i1, j1) = (x / k, x % k);
        let (i2, j2) = (y / k, y % k);
        // a^i1 b^j1 a^i2 b^j2 = a^{i1 + i2 w^{j1}} b^{j1 + j2}
        let i = (i1 as u64 + i2 as u64 * wpow[j1]) % m as u64;
        let j = (j1 + j2) % k;
        i as usize * k + j
    })
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Q_{4m} = <x, y : y^{2m} = 1, x^2 = y^m, x y x^-1 = y^-1> built on index
/// pairs y^i x^e.
fn generalized_quaternion(m: u32) -> Result<GroupTable> {
    require(m >= 2, "generalized quaternion needs m >= 2")?;
    let m = m as usize;
    let two_m = 2 * m;
    let order = 4 * m;
    let mut labels = Vec::with_capacity(order);
    for i in 0..two_m {
        for e in 0..2 {
            labels.push(join_label(vec![
                pow_label("y", i as u32),
                pow_label("x", e as u32),
            ]));
        }
    }
    GroupTable::from_mul_fn(
        order,
        labels,
        GroupSpec::GeneralizedQuaternion { m: m as u32 },
        |a, b| {
            let (i, e) = (a / 2, a % 2);
            let (j, f) = (b / 2, b % 2);
            if e == 0 {
                ((i + j) % two_m) * 2 + f
            } else if f == 0 {
                // y^i x y^j = y^{i-j} x
                ((i + two_m - j) % two_m) * 2 + 1
            } else {
                // y^i x y^j x = y^{i-j} x^2 = y^{i-j+m}
                ((i + two_m - j + m) % two_m) * 2
            }
        },
    )
}

fn cyclic(k: u32) -> Result<GroupTable> {
    require(k >= 1, "cyclic group needs k >= 1")?;
    let k = k as usize;
    let labels = (0..k)
        .map(|i| join_label(vec![pow_label("c", i as u32)]))
        .collect();
    GroupTable::from_mul_fn(k, labels, GroupSpec::Cyclic { k: k as u32 }, |x, y| {
        (x + y) % k
    })
}

/// 2x2 matrices over GF(q) in field enumeration order, filtered by a
/// determinant predicate.
fn matrix_group<F>(
    field: &FieldSpec,
    keep: F,
    spec: GroupSpec,
) -> Result<GroupTable>
where
    F: Fn(&FieldSpec, usize) -> bool,
{
    let q = field.order();
    let elems = field.enumerate();
    let mut members = Vec::new();
    let mut member_id = vec![usize::MAX; q * q * q * q];
    for ia in 0..q {
        for ib in 0..q {
            for ic in 0..q {
                for id in 0..q {
                    let det = field.sub(
                        &field.mul(&elems[ia], &elems[id]),
                        &field.mul(&elems[ib], &elems[ic]),
                    );
                    let det_idx = field.index_of(&det);
                    let flat = ((ia * q + ib) * q + ic) * q + id;
                    if keep(field, det_idx) {
                        member_id[flat] = members.len();
                        members.push([ia, ib, ic, id]);
                    }
                }
            }
        }
    }
    let labels = members
        .iter()
        .map(|&[a, b, c, d]| {
            format!(
                "[{},{};{},{}]",
                field.label(&elems[a]),
                field.label(&elems[b]),
                field.label(&elems[c]),
                field.label(&elems[d])
            )
        })
        .collect();
    let order = members.len();
    GroupTable::from_mul_fn(order, labels, spec, |x, y| {
        let [a1, b1, c1, d1] = members[x].map(|i| &elems[i]);
        let [a2, b2, c2, d2] = members[y].map(|i| &elems[i]);
        let a = field.add(&field.mul(a1, a2), &field.mul(b1, c2));
        let b = field.add(&field.mul(a1, b2), &field.mul(b1, d2));
        let c = field.add(&field.mul(c1, a2), &field.mul(d1, c2));
        let d = field.add(&field.mul(c1, b2), &field.mul(d1, d2));
        let flat = ((field.index_of(&a) * q + field.index_of(&b)) * q + field.index_of(&c)) * q
            + field.index_of(&d);
        member_id[flat]
    })
}

/// PSL(2, 2^k) = SL(2, 2^k): determinant-one matrices over GF(2^k).
fn psl2(k: u32) -> Result<GroupTable> {
    require(k >= 2, "psl2 needs k >= 2")?;
    let field = gf::find_irreducible(2, k)?;
    matrix_group(&field, |_, det_idx| det_idx == 1, GroupSpec::Psl2 { k })
}

/// GL(2, q): invertible matrices over GF(q), q = p^n > 2.
fn gl2(q: u32) -> Result<GroupTable> {
    require(q > 2, "gl2 needs q > 2")?;
    let (p, n) = gf::prime_power(q as u64)?;
    let field = gf::find_irreducible(p, n)?;
    matrix_group(&field, |_, det_idx| det_idx != 0, GroupSpec::Gl2 { q })
}

/// U(a, b) pairs over GF(2^n) with U(a,b)U(a',b') = U(a+a', b+b'+a' th(a)).
fn hanaki_u(n: u32) -> Result<GroupTable> {
    require(n >= 2, "hanaki-u needs n >= 2")?;
    let field = gf::find_irreducible(2, n)?;
    let q = field.order();
    let elems = field.enumerate();
    let mut labels = Vec::with_capacity(q * q);
    for a in 0..q {
        for b in 0..q {
            labels.push(format!(
                "U({}|{})",
                field.label(&elems[a]),
                field.label(&elems[b])
            ));
        }
    }
    let frob: Vec<usize> = elems
        .iter()
        .map(|a| field.index_of(&field.frobenius(a)))
        .collect();
    GroupTable::from_mul_fn(q * q, labels, GroupSpec::HanakiU { n }, |x, y| {
        let (a1, b1) = (x / q, x % q);
        let (a2, b2) = (y / q, y % q);
        let a = field.index_of(&field.add(&elems[a1], &elems[a2]));
        let cross = field.mul(&elems[a2], &elems[frob[a1]]);
        let b = field.index_of(&field.add(&field.add(&elems[b1], &elems[b2]), &cross));
        a * q + b
    })
}

/// V(a, b, c) triples over GF(p^n) with
/// V(a,b,c)V(a',b',c') = V(a+a', b+b'+c a', c+c').
fn hanaki_v(field: FieldSpec, spec: GroupSpec) -> Result<GroupTable> {
    let q = field.order();
    let elems = field.enumerate();
    let mut labels = Vec::with_capacity(q * q * q);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                labels.push(format!(
                    "V({}|{}|{})",
                    field.label(&elems[a]),
                    field.label(&elems[b]),
                    field.label(&elems[c])
                ));
            }
        }
    }
    GroupTable::from_mul_fn(q * q * q, labels, spec, |x, y| {
        let (a1, b1, c1) = (x / (q * q), (x / q) % q, x % q);
        let (a2, b2, c2) = (y / (q * q), (y / q) % q, y % q);
        let a = field.index_of(&field.add(&elems[a1], &elems[a2]));
        let cross = field.mul(&elems[c1], &elems[a2]);
        let b = field.index_of(&field.add(&field.add(&elems[b1], &elems[b2]), &cross));
        let c = field.index_of(&field.add(&elems[c1], &elems[c2]));
        (a * q + b) * q + c
    })
}

/// (D8 x Z4) / <(a^2, c^2)>, the central product D8 * Z4.
fn d8_star_z4() -> Result<GroupTable> {
    let d8 = semidirect_cyclic(4, 2, 3, GroupSpec::Dihedral { m: 4 })?;
    let z4 = cyclic(4)?;
    let prod = direct_product(&d8, &z4)?;
    // a^2 in D8 is element (i=2, j=0) -> index 4; c^2 in Z4 is index 2.
    let a2c2 = 4 * z4.order() + 2;
    let quotient = prod.quotient_by_normal(&[prod.identity(), a2c2])?;
    // Same table, catalog echo instead of the quotient echo.
    GroupTable::from_mul_fn(
        quotient.order(),
        quotient.labels().to_vec(),
        GroupSpec::D8StarZ4,
        |x, y| quotient.mul(x, y),
    )
}

/// SG(16, 3) from its printed relators; the enumerator must confirm order 16.
/// A different closing order is reported as an error, never patched.
fn sg16_3() -> Result<GroupTable> {
    let pres = sg16_3_presentation();
    let table = todd_coxeter(&pres)?;
    if table.order() != 16 {
        return Err(Error::BadTable(format!(
            "sg16-3 relators closed with order {}, expected 16",
            table.order()
        )));
    }
    GroupTable::from_mul_fn(
        table.order(),
        table.labels().to_vec(),
        GroupSpec::Sg16_3,
        |x, y| table.mul(x, y),
    )
}

/// <a, b : a^4 = b^4 = 1, ab = b^-1 a^-1, a b^-1 = b a^-1>.
pub fn sg16_3_presentation() -> Presentation {
    Presentation::new(
        2,
        vec![
            vec![1, 1, 1, 1],
            vec![2, 2, 2, 2],
            vec![1, 2, 1, 2],
            vec![1, -2, 1, -2],
        ],
        64,
    )
}

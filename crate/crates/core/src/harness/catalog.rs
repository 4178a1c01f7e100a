//! The built-in case catalog: which groups the default sweep builds and
//! which claim each one is checked against.

use std::collections::BTreeMap;

use super::SweepCase;
use crate::error::Error;
use crate::formulas::ResultId;
use crate::group::{ExtraspecialKind, GroupSpec, Presentation};
use crate::Result;

fn case(group: GroupSpec, result: ResultId) -> SweepCase {
    SweepCase {
        group,
        result: Some(result),
    }
}

fn energy_only(group: GroupSpec) -> SweepCase {
    SweepCase {
        group,
        result: None,
    }
}

fn product(a: GroupSpec, b: GroupSpec) -> GroupSpec {
    GroupSpec::DirectProduct(Box::new(a), Box::new(b))
}

fn cyclic(k: u32) -> GroupSpec {
    GroupSpec::Cyclic { k }
}

/// The six order-16 groups with |Z| = 4, in publication order.
pub fn order_16_groups() -> Vec<GroupSpec> {
    vec![
        product(cyclic(2), GroupSpec::Dihedral { m: 4 }),
        product(cyclic(2), GroupSpec::GeneralizedQuaternion { m: 2 }),
        GroupSpec::M16,
        GroupSpec::Z4SemidirectZ4,
        GroupSpec::D8StarZ4,
        GroupSpec::Sg16_3,
    ]
}

/// Default sweep: every family instance of order <= 600 that the catalog
/// names, paired with the claim whose hypothesis it satisfies. Groups with
/// no applicable claim run energy-only. Claims known to disagree with the
/// computed ground truth are still paired; see `expected_errata_ids`.
pub fn default_sweep_cases() -> Vec<SweepCase> {
    let mut cases = vec![
        // Dihedral groups.
        case(GroupSpec::Dihedral { m: 3 }, ResultId::Cor2_6),
        case(GroupSpec::Dihedral { m: 3 }, ResultId::ThmPlanar),
        case(GroupSpec::Dihedral { m: 4 }, ResultId::Thm2_2),
        case(GroupSpec::Dihedral { m: 4 }, ResultId::ThmPlanar),
        case(GroupSpec::Dihedral { m: 4 }, ResultId::Prop4_1),
        case(GroupSpec::Dihedral { m: 4 }, ResultId::Cor4_2),
        case(GroupSpec::Dihedral { m: 4 }, ResultId::PropPr1),
        case(GroupSpec::Dihedral { m: 5 }, ResultId::Cor2_6),
        // Generalized quaternion groups.
        case(GroupSpec::GeneralizedQuaternion { m: 2 }, ResultId::Cor2_7),
        case(GroupSpec::GeneralizedQuaternion { m: 2 }, ResultId::Thm2_2),
        case(GroupSpec::GeneralizedQuaternion { m: 2 }, ResultId::ThmPlanar),
        // Quasidihedral groups.
        case(GroupSpec::Quasidihedral { n: 4 }, ResultId::Prop3_2),
        case(GroupSpec::Quasidihedral { n: 5 }, ResultId::Prop3_2),
        // pq Frobenius groups.
        case(GroupSpec::FrobeniusPQ { p: 2, q: 3 }, ResultId::Prop3_1),
        case(GroupSpec::FrobeniusPQ { p: 3, q: 7 }, ResultId::Prop3_1),
        // Matrix families.
        case(GroupSpec::Psl2 { k: 2 }, ResultId::Prop3_3),
        case(GroupSpec::Gl2 { q: 3 }, ResultId::Prop3_4),
        case(GroupSpec::HanakiU { n: 2 }, ResultId::Prop3_5),
        case(GroupSpec::HanakiU { n: 3 }, ResultId::Prop3_5),
        case(GroupSpec::HanakiV { p: 2, n: 1 }, ResultId::Prop3_6),
        case(GroupSpec::HanakiV { p: 3, n: 1 }, ResultId::Prop3_6),
        // Sz(2), plus a central extension exercising |Z| > 1.
        case(GroupSpec::SuzukiSz2, ResultId::Thm2_1),
        case(product(GroupSpec::SuzukiSz2, cyclic(2)), ResultId::Thm2_1),
        case(
            product(GroupSpec::Dihedral { m: 4 }, cyclic(3)),
            ResultId::Thm2_2,
        ),
        // Order 27, both exponents.
        case(
            GroupSpec::ExtraspecialP3 {
                p: 3,
                kind: ExtraspecialKind::ExponentP,
            },
            ResultId::Cor2_3,
        ),
        case(
            GroupSpec::ExtraspecialP3 {
                p: 3,
                kind: ExtraspecialKind::ExponentP,
            },
            ResultId::Prop4_3,
        ),
        case(
            GroupSpec::ExtraspecialP3 {
                p: 3,
                kind: ExtraspecialKind::ExponentPSquared,
            },
            ResultId::Cor2_3,
        ),
    ];
    for g in order_16_groups() {
        cases.push(case(g, ResultId::Prop4_4));
    }
    // Families with no sound applicable claim: energy and oracle checks only.
    for m in 6..=12u32 {
        cases.push(energy_only(GroupSpec::Dihedral { m }));
    }
    for m in 3..=8u32 {
        cases.push(energy_only(GroupSpec::GeneralizedQuaternion { m }));
    }
    cases.push(energy_only(GroupSpec::FrobeniusPQ { p: 2, q: 5 }));
    cases.push(energy_only(GroupSpec::FrobeniusPQ { p: 5, q: 11 }));
    cases
}

/// Case ids expected to report Mismatch in the default sweep: the printed
/// claims whose values disagree with both exact oracles.
pub fn expected_errata_ids() -> Vec<String> {
    vec![
        "dihedral(m=3)::Cor2.6".into(),
        "dihedral(m=3)::ThmPlanar".into(),
        "dihedral(m=4)::ThmPlanar".into(),
        "dihedral(m=5)::Cor2.6".into(),
        "frobenius(p=2,q=3)::Prop3.1".into(),
        "frobenius(p=3,q=7)::Prop3.1".into(),
        "gl2(q=3)::Prop3.4".into(),
        "quaternion(m=2)::Cor2.7".into(),
        "quaternion(m=2)::ThmPlanar".into(),
    ]
}

/// Catalog groups of order <= `max_order` for the planarity survey.
pub fn survey_catalog(max_order: usize) -> Vec<GroupSpec> {
    let mut specs = Vec::new();
    for m in 3..=8u32 {
        if 2 * m as usize <= max_order {
            specs.push(GroupSpec::Dihedral { m });
        }
    }
    for m in 2..=4u32 {
        if 4 * m as usize <= max_order {
            specs.push(GroupSpec::GeneralizedQuaternion { m });
        }
    }
    if 16 <= max_order {
        specs.push(GroupSpec::Quasidihedral { n: 4 });
        specs.extend(order_16_groups());
        specs.push(GroupSpec::HanakiU { n: 2 });
        specs.push(GroupSpec::Metacyclic { m: 4, n: 2 });
    }
    if 12 <= max_order {
        specs.push(GroupSpec::Metacyclic { m: 3, n: 2 });
    }
    for (p, q) in [(2u32, 3u32), (2, 5), (2, 7)] {
        if (p * q) as usize <= max_order {
            specs.push(GroupSpec::FrobeniusPQ { p, q });
        }
    }
    if 8 <= max_order {
        specs.push(GroupSpec::HanakiV { p: 2, n: 1 });
    }
    specs
}

/// Presentations used by the coset-enumeration cross-checks: each closes to
/// the same group as the structural constructor.
pub fn presentation_of(spec: &GroupSpec) -> Option<Presentation> {
    let pres = match spec {
        // <a, b : a^5 = b^4 = 1, b^-1 a b = a^2>
        GroupSpec::SuzukiSz2 => Presentation::new(
            2,
            vec![vec![1; 5], vec![2; 4], vec![-2, 1, 2, -1, -1]],
            80,
        ),
        // <a, b : a^{2^{n-1}} = b^2 = 1, b a b^-1 = a^{2^{n-2}-1}>
        GroupSpec::Quasidihedral { n } => {
            let half = 1usize << (n - 1);
            let twist = (1i32 << (n - 2)) - 1;
            let mut rel = vec![2, 1, -2];
            rel.extend(std::iter::repeat_n(-1, twist as usize));
            Presentation::new(
                2,
                vec![vec![1; half], vec![2, 2], rel],
                4 * (1usize << n),
            )
        }
        // <a, b : a^8 = b^2 = 1, b a b = a^5>
        GroupSpec::M16 => Presentation::new(
            2,
            vec![vec![1; 8], vec![2, 2], vec![2, 1, 2, -1, -1, -1, -1, -1]],
            64,
        ),
        GroupSpec::Sg16_3 => crate::group::sg16_3_presentation(),
        // <x, y : y^{2m} = 1, x^2 = y^m, x y x^-1 = y^-1>  (x = gen 1, y = gen 2)
        GroupSpec::GeneralizedQuaternion { m } => {
            let m = *m as usize;
            let mut x2_ym = vec![1, 1];
            x2_ym.extend(std::iter::repeat_n(-2, m));
            Presentation::new(
                2,
                vec![vec![2; 2 * m], x2_ym, vec![1, 2, -1, 2]],
                16 * m,
            )
        }
        _ => return None,
    };
    Some(pres)
}

/// Resolve a family name plus named parameters into a [`GroupSpec`].
pub fn family_spec(name: &str, params: &BTreeMap<String, i64>) -> Result<GroupSpec> {
    let get = |key: &str| -> Result<u32> {
        let v = params
            .get(key)
            .copied()
            .ok_or_else(|| Error::Config(format!("family {name:?} needs parameter --{key}")))?;
        u32::try_from(v).map_err(|_| Error::Config(format!("parameter {key} = {v} out of range")))
    };
    let spec = match name {
        "dihedral" => GroupSpec::Dihedral { m: get("m")? },
        "quaternion" => GroupSpec::GeneralizedQuaternion { m: get("m")? },
        "quasidihedral" => GroupSpec::Quasidihedral { n: get("n")? },
        "metacyclic" => GroupSpec::Metacyclic {
            m: get("m")?,
            n: get("n")?,
        },
        "suzuki" => GroupSpec::SuzukiSz2,
        "frobenius" => GroupSpec::FrobeniusPQ {
            p: get("p")?,
            q: get("q")?,
        },
        "psl2" => GroupSpec::Psl2 { k: get("k")? },
        "gl2" => GroupSpec::Gl2 { q: get("q")? },
        "hanaki-u" => GroupSpec::HanakiU { n: get("n")? },
        "hanaki-v" => GroupSpec::HanakiV {
            p: get("p")?,
            n: get("n")?,
        },
        "m16" => GroupSpec::M16,
        "z4rz4" => GroupSpec::Z4SemidirectZ4,
        "d8*z4" | "d8z4" => GroupSpec::D8StarZ4,
        "sg16-3" | "sg16" => GroupSpec::Sg16_3,
        "extraspecial" => {
            let p = get("p")?;
            let kind = match params.get("n").copied().unwrap_or(1) {
                1 => ExtraspecialKind::ExponentP,
                2 => ExtraspecialKind::ExponentPSquared,
                other => {
                    return Err(Error::Config(format!(
                        "extraspecial exponent selector n = {other} must be 1 (exponent p) or 2 (exponent p^2)"
                    )))
                }
            };
            GroupSpec::ExtraspecialP3 { p, kind }
        }
        "cyclic" => GroupSpec::Cyclic { k: get("k")? },
        "z2xd8" => product(cyclic(2), GroupSpec::Dihedral { m: 4 }),
        "z2xq8" => product(cyclic(2), GroupSpec::GeneralizedQuaternion { m: 2 }),
        other => {
            return Err(Error::Config(format!(
                "unknown family {other:?} (expected one of: dihedral, quaternion, quasidihedral, \
                 metacyclic, suzuki, frobenius, psl2, gl2, hanaki-u, hanaki-v, m16, z4rz4, d8z4, \
                 sg16-3, extraspecial, cyclic, z2xd8, z2xq8)"
            )))
        }
    };
    Ok(spec)
}

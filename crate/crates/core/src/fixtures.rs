//! Diagram texts for standard links, surgery presentations and
//! Reidemeister move pairs, plus the shipped `.tg` fixture files.

/// `p` copies of a generator slice, each followed by identities.
fn twists(label: &str, p: i64, before: usize, after: usize) -> Vec<String> {
    let tw = if p > 0 { "tw+" } else { "tw-" };
    (0..p.unsigned_abs())
        .map(|_| {
            let mut gens: Vec<String> = (0..before).map(|_| format!("id({label})")).collect();
            gens.push(format!("{tw}({label})"));
            gens.extend((0..after).map(|_| format!("id({label})")));
            gens.join(", ")
        })
        .collect()
}

/// The `p`-framed red unknot, a surgery presentation of `L(p,1)`.
pub fn framed_unknot(p: i64) -> String {
    let mut slices = vec!["lcoev(red)".to_string()];
    slices.extend(twists("red", p, 0, 1));
    slices.push("rev(red)".into());
    slices.join("; ")
}

/// Two split red unknots with framings `a` and `b`.
pub fn framed_unlink(a: i64, b: i64) -> String {
    format!("{}; {}", framed_unknot(a), framed_unknot(b))
}

/// The Hopf link coloured `a` and `b` (labels in the diagram grammar; the
/// second component's strands are upward, the first's downward strand is
/// `a*`). Red components are written `red`.
pub fn hopf_link(a: &str, b: &str) -> String {
    let dual = |x: &str| if x == "red" { "red".to_string() } else { format!("{x}*") };
    let (a_, b_) = (dual(a), dual(b));
    format!(
        "lcoev({a}), lcoev({b}); id({a}), x+({a_},{b}), id({b_}); id({a}), x+({b},{a_}), id({b_}); rev({a}), rev({b})"
    )
}

/// The red Hopf link with framings `a` and `b`.
pub fn framed_hopf_link(a: i64, b: i64) -> String {
    let mut slices = vec!["lcoev(red), lcoev(red)".to_string()];
    slices.extend(twists("red", a, 0, 3));
    slices.extend(twists("red", b, 3, 0));
    slices.push("id(red), x+(red,red), id(red)".into());
    slices.push("id(red), x+(red,red), id(red)".into());
    slices.push("rev(red), rev(red)".into());
    slices.join("; ")
}

/// Appends a split `±1`-framed red unknot.
pub fn stabilize(text: &str, sign: i64) -> String {
    if text.trim().is_empty() {
        return framed_unknot(sign);
    }
    format!("{}; {}", framed_unknot(sign), text)
}

/// Pairs of open diagrams related by a framed Reidemeister move or by
/// naturality, in the colour `x` (a non-dual catalogue label).
pub fn reidemeister_pairs(x: &str) -> Vec<(&'static str, String, String)> {
    vec![
        ("R2", format!("x+({x},{x}); x-({x},{x})"), format!("id({x}), id({x})")),
        ("R2 mixed", format!("x+({x},{x}*); x-({x}*,{x})"), format!("id({x}), id({x}*)")),
        (
            "R3",
            format!("x+({x},{x}), id({x}); id({x}), x+({x},{x}); x+({x},{x}), id({x})"),
            format!("id({x}), x+({x},{x}); x+({x},{x}), id({x}); id({x}), x+({x},{x})"),
        ),
        ("R1 framed", format!("id({x}), lcoev({x}); x+({x},{x}), id({x}*); id({x}), rev({x})"), format!("tw+({x})")),
        ("twist slide", format!("tw+({x}), id({x}); x+({x},{x})"), format!("x+({x},{x}); id({x}), tw+({x})")),
        ("snake", format!("id({x}), rcoev({x}); rev({x}), id({x})"), format!("id({x})")),
        ("balancing", format!("tw+(({x}(x){x}))"), format!("tw+({x}), tw+({x}); x+({x},{x}); x+({x},{x})")),
    ]
}

/// Closed red diagrams related by a Reidemeister move, each component
/// carrying one positive twist so that integral contractions are nonzero.
pub fn red_move_pairs() -> Vec<(&'static str, String, String)> {
    // two components side by side, the middle slices acting on the inner strands
    let close2 = |mid: &[&str]| {
        let mut slices = vec!["lcoev(red), lcoev(red)".to_string(), "tw+(red), id(red), id(red), tw+(red)".to_string()];
        slices.extend(mid.iter().map(|m| format!("id(red), {m}, id(red)")));
        slices.push("rev(red), rev(red)".into());
        slices.join("; ")
    };
    vec![
        ("R2", close2(&["x+(red,red)", "x-(red,red)"]), close2(&["id(red), id(red)"])),
        (
            "R1 framed",
            "lcoev(red); id(red), lcoev(red), id(red); x+(red,red), id(red), id(red); id(red), rev(red), id(red); rev(red)"
                .to_string(),
            framed_unknot(1),
        ),
    ]
}

/// Fixture files shipped in `crates/core/fixtures`, by file name.
pub const FILES: &[(&str, &str)] = &[
    ("unknot_V1.tg", include_str!("../fixtures/unknot_V1.tg")),
    ("unknot_P0.tg", include_str!("../fixtures/unknot_P0.tg")),
    ("hopf_V2_V2.tg", include_str!("../fixtures/hopf_V2_V2.tg")),
    ("hopf_P0_P0.tg", include_str!("../fixtures/hopf_P0_P0.tg")),
    ("lens_2_1.tg", include_str!("../fixtures/lens_2_1.tg")),
    ("lens_3_1.tg", include_str!("../fixtures/lens_3_1.tg")),
    ("s2xs1.tg", include_str!("../fixtures/s2xs1.tg")),
    ("r3_left.tg", include_str!("../fixtures/r3_left.tg")),
    ("r3_right.tg", include_str!("../fixtures/r3_right.tg")),
    ("slide_unlink.tg", include_str!("../fixtures/slide_unlink.tg")),
    ("slide_hopf.tg", include_str!("../fixtures/slide_hopf.tg")),
    ("red_around_P0.tg", include_str!("../fixtures/red_around_P0.tg")),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangle::{linking_matrix, parse_diagram};

    #[test]
    fn generated_texts_parse() {
        for p in -3..=3 {
            let d = parse_diagram(&framed_unknot(p)).unwrap();
            assert_eq!(linking_matrix(&d).unwrap().linking, vec![vec![p]]);
        }
        let d = parse_diagram(&framed_hopf_link(2, -1)).unwrap();
        let lk = linking_matrix(&d).unwrap().linking;
        assert_eq!((lk[0][0], lk[1][1], lk[0][1].abs()), (2, -1, 1));
        let d = parse_diagram(&framed_unlink(1, 3)).unwrap();
        assert_eq!(linking_matrix(&d).unwrap().linking, vec![vec![1, 0], vec![0, 3]]);
        for x in ["V1", "P0"] {
            for (_, a, b) in reidemeister_pairs(x) {
                parse_diagram(&a).unwrap();
                parse_diagram(&b).unwrap();
            }
        }
        for (_, a, b) in red_move_pairs() {
            assert_eq!(linking_matrix(&parse_diagram(&a).unwrap()).unwrap(), linking_matrix(&parse_diagram(&b).unwrap()).unwrap());
        }
    }

    #[test]
    fn shipped_files_parse() {
        for (name, text) in FILES {
            parse_diagram(text).unwrap_or_else(|e| panic!("{}: {}", name, e));
        }
    }
}

//! Worked examples with known answers, shared by the regression suite, the
//! tests and the CLI.

use crate::combinat::{Partition, WeakComposition};
use crate::diagram::{Cell, Diagram};
use crate::fillings::Filling;
use crate::frsk::{Biword, TableauPair};

fn diagram(cells: &[(u32, u32)]) -> Diagram {
    cells.iter().map(|&c| Cell::from(c)).collect()
}

fn filling(rows: &[&[u32]]) -> Filling {
    Filling::new(rows.iter().map(|r| r.to_vec()).collect())
}

fn wc(p: &[u32]) -> WeakComposition {
    WeakComposition::from(p)
}

/// A 13-letter lower-triangular biword on `[7]`.
pub fn biword13() -> Biword {
    Biword::new(&[1, 3, 3, 4, 4, 4, 5, 5, 5, 5, 6, 7, 7], &[1, 3, 2, 4, 3, 1, 4, 4, 3, 2, 1, 6, 3])
        .expect("rows have equal length")
}

pub fn skyline_shape() -> WeakComposition {
    wc(&[1, 0, 3, 6, 1, 0, 2])
}

/// [`biword13`] with its eighth letter lowered from 4 to 3; this is the
/// biword whose images are [`biword13_flagged`] and [`biword13_classical`].
/// The printed weights of those pairs disagree with [`biword13`].
pub fn biword13_corrected() -> Biword {
    Biword::new(&[1, 3, 3, 4, 4, 4, 5, 5, 5, 5, 6, 7, 7], &[1, 3, 2, 4, 3, 1, 4, 3, 3, 2, 1, 6, 3])
        .expect("rows have equal length")
}

/// The flagged pair of [`biword13_corrected`]: an SSKT and a reverse SSAF.
pub fn biword13_flagged() -> TableauPair {
    TableauPair::new(
        filling(&[&[1], &[], &[3, 3, 2], &[4, 4, 3, 3, 3, 1], &[2], &[], &[6, 1]]),
        filling(&[&[1], &[], &[3, 3, 5], &[4, 4, 4, 5, 5, 6], &[5], &[], &[7, 7]]),
    )
}

/// The classical pair of [`biword13_corrected`]: a reverse SSYT and an SSYT, rows
/// listed from the longest.
pub fn biword13_classical() -> TableauPair {
    TableauPair::new(
        filling(&[&[6, 4, 3, 3, 3, 1], &[4, 3, 2], &[3, 1], &[2], &[1]]),
        filling(&[&[1, 3, 4, 5, 5, 6], &[3, 4, 5], &[4, 7], &[5], &[7]]),
    )
}

/// Insertion tableau before the last classical insertion of 3.
pub fn classical_before() -> Filling {
    filling(&[&[6, 4, 3, 3, 2, 1], &[4, 3, 1], &[3], &[2], &[1]])
}

/// SSKT before the last flagged insertion of 3 with `n = 7`.
pub fn flagged_before() -> Filling {
    filling(&[&[1], &[], &[3, 3, 1], &[4, 4, 3, 3, 2, 1], &[2], &[], &[6]])
}

/// Inserting 3 into this column with `n = 3` finishes in one step.
pub fn one_step_column() -> (Filling, Filling) {
    (filling(&[&[1], &[2]]), filling(&[&[1], &[2], &[3]]))
}

pub fn kohnert_top() -> Diagram {
    diagram(&[(2, 4), (1, 3), (2, 3), (3, 3), (3, 2)])
}

pub fn kohnert_children() -> Vec<Diagram> {
    vec![
        diagram(&[(1, 3), (2, 3), (3, 3), (2, 2), (3, 2)]),
        diagram(&[(2, 4), (1, 3), (2, 3), (3, 2), (3, 1)]),
        diagram(&[(2, 4), (1, 3), (2, 3), (3, 3), (3, 1)]),
    ]
}

/// `D_a` for [`skyline_shape`].
pub fn skyline_da() -> Diagram {
    let mut cells = vec![(1, 1), (2, 3), (3, 3), (4, 3), (11, 5), (12, 7), (13, 7)];
    cells.extend((5..=10).map(|c| (c, 4)));
    diagram(&cells)
}

/// A southwest diagram and a diagram that is not.
pub fn southwest_pair() -> (Diagram, Diagram) {
    (diagram(&[(1, 1), (3, 1), (1, 2), (4, 2)]), diagram(&[(3, 1), (1, 2), (3, 2), (4, 2)]))
}

pub fn snake_host() -> WeakComposition {
    wc(&[3, 7, 0, 2, 5, 8, 6])
}

pub fn snake_cells() -> Diagram {
    diagram(&[(1, 1), (2, 1), (3, 1), (7, 2), (2, 4), (3, 5), (4, 5), (5, 5), (5, 7), (6, 7)])
}

pub fn snake_complement() -> WeakComposition {
    wc(&[0, 6, 0, 1, 2, 8, 4])
}

/// Pairs `(a, b, a ≤ b)` in the key poset.
pub fn key_poset_cases() -> Vec<(WeakComposition, WeakComposition, bool)> {
    vec![(wc(&[0, 6, 0, 1, 2, 8, 4]), snake_host(), true), (wc(&[0, 6, 0, 1, 5, 8, 2]), snake_host(), false)]
}

pub fn rim_hook_partition() -> Partition {
    Partition::new(vec![8, 7, 6, 5, 3, 2]).expect("decreasing")
}

pub fn rim_hook_cells() -> Diagram {
    diagram(&[(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 3), (5, 3), (5, 4), (6, 4), (6, 5), (7, 5)])
}

/// A diagram with its weakly connected components.
pub fn component_cells() -> Vec<Diagram> {
    vec![diagram(&[(1, 1), (1, 3), (1, 4)]), diagram(&[(2, 5)]), diagram(&[(4, 5), (5, 3), (6, 3), (5, 2), (6, 7)])]
}

/// Label fillings of two tabloids of shape [`snake_host`], with weight and
/// sign.
pub fn tabloid_labels() -> Vec<(Filling, WeakComposition, i64)> {
    vec![
        (
            filling(&[
                &[1, 1, 1],
                &[2, 2, 2, 2, 2, 2, 1],
                &[],
                &[4, 1],
                &[4, 2, 1, 1, 1],
                &[6, 6, 6, 6, 4, 2, 2, 2],
                &[4, 4, 4, 4, 1, 1],
            ]),
            wc(&[10, 10, 0, 7, 0, 4, 0]),
            -1,
        ),
        (
            filling(&[
                &[1, 1, 1],
                &[2, 2, 2, 2, 2, 1, 1],
                &[],
                &[4, 4],
                &[5, 4, 1, 1, 1],
                &[6, 4, 4, 4, 4, 4, 4, 4],
                &[7, 7, 7, 4, 2, 2],
            ]),
            wc(&[8, 7, 0, 11, 1, 1, 3]),
            1,
        ),
    ]
}

/// Two tabloids of shape `(2,4,3)` and weight `(5,4,0)`, signs `-1`, `+1`.
pub fn cancelling_labels() -> (Filling, Filling) {
    (filling(&[&[1, 1], &[2, 2, 2, 1], &[2, 1, 1]]), filling(&[&[1, 1], &[2, 1, 1, 1], &[2, 2, 2]]))
}

/// Two tabloids of shape `(1,1,2,2)` whose weights sort alike.
pub fn sorted_alike_labels() -> (Filling, Filling) {
    (filling(&[&[1], &[2], &[2, 2], &[4, 4]]), filling(&[&[1], &[1], &[3, 3], &[4, 3]]))
}

/// A snake of [`snake_host`] and a filling in its set `𝒢(S)`, `n = 7`.
pub fn gset_member() -> (Diagram, Filling) {
    (
        diagram(&[(1, 1), (2, 1), (3, 1), (3, 5), (4, 5), (5, 5), (5, 7), (6, 7)]),
        filling(&[
            &[1, 1, 1],
            &[2, 2, 2, 2, 2, 1, 1],
            &[],
            &[1, 1],
            &[4, 3, 1, 1, 1],
            &[6, 5, 4, 4, 3, 2, 2, 2],
            &[7, 7, 3, 1, 1, 1],
        ]),
    )
}

/// `(S, S', T)` with `ι(S, T) = (S', T)`, `n = 7`.
pub fn involution_pair() -> (Diagram, Diagram, Filling) {
    let s = diagram(&[(1, 1), (2, 1), (3, 1), (3, 5), (4, 5), (5, 5)]);
    let s2 = s.union(&diagram(&[(6, 2), (7, 2)]));
    let t = filling(&[
        &[1, 1, 1],
        &[2, 2, 2, 1, 1, 1, 1],
        &[],
        &[1, 1],
        &[4, 3, 1, 1, 1],
        &[6, 5, 4, 4, 4, 4, 3, 1],
        &[7, 7, 3, 3, 3, 2],
    ]);
    (s, s2, t)
}

//! Layered realizations of matchings and planar partitions, and the GL2
//! basis with its canonical phantom placement.
//!
//! Boundary convention: bottom points `1..=k` left to right, top points
//! `k+1..=k+l` right to left, so the codomain word position `j` (0-based,
//! left to right) carries point `k+l-j`.

use super::{
    Category, GeneratorName, LayeredDiagram, Matching, ObjectWord, PlanarPartition, StrandKind,
    StrandLabel,
};
use crate::error::DiagramError;
use GeneratorName::*;

#[derive(Clone, Copy, PartialEq, Debug)]
enum SlotId {
    /// A boundary point, identified by its word position in this half.
    Point(usize),
    /// The single strand a through block has been reduced to.
    Through(usize),
    /// A phantom stub left behind by a same-orientation GL2 arc.
    Stub,
}

#[derive(Clone, Copy, Debug)]
struct Slot {
    label: StrandLabel,
    id: SlotId,
}

/// Realize a crossingless matching as a layered cap/cup diagram over
/// `X^k -> X^l` (SL2 or SO3 strands).
pub fn matching_to_diagram(category: Category, m: &Matching) -> LayeredDiagram {
    let blocks: Vec<Vec<usize>> = m.pairs.iter().map(|&(a, b)| vec![a, b]).collect();
    realize_x_blocks(category, m.bottom, m.top, &blocks)
        .expect("noncrossing matchings are always realizable")
}

/// Realize a noncrossing partition with blocks of size >= 2 as a layered
/// SO3 web: caps/cups for blocks of size two, left-comb chains of trivalent
/// vertices for larger blocks.
pub fn partition_to_diagram(p: &PlanarPartition) -> LayeredDiagram {
    realize_x_blocks(Category::So3, p.bottom, p.top, &p.blocks)
        .expect("noncrossing partitions are always realizable")
}

fn realize_x_blocks(
    category: Category,
    k: usize,
    l: usize,
    blocks: &[Vec<usize>],
) -> Result<LayeredDiagram, DiagramError> {
    let domain = ObjectWord::x_power(category, k);
    let codomain = ObjectWord::x_power(category, l);
    realize(category, &domain, &codomain, blocks)
}

/// The GL2 web basis of `Hom(domain, codomain)`: one diagram per
/// crossingless matching of the boundary points, with phantom edges placed
/// canonically (vertex stubs closed greedily left to right). The boundary
/// words must consist of usual strands.
pub fn gl2_basis(
    domain: &ObjectWord,
    codomain: &ObjectWord,
) -> Result<Vec<LayeredDiagram>, DiagramError> {
    if domain
        .labels
        .iter()
        .chain(codomain.labels.iter())
        .any(|lab| lab.kind() == StrandKind::Phantom)
    {
        return Err(DiagramError::NoValidPhantomPlacement);
    }
    let k = domain.len();
    let l = codomain.len();
    let mut out = Vec::new();
    for m in super::enumerate_matchings(k, l) {
        let blocks: Vec<Vec<usize>> = m.pairs.iter().map(|&(a, b)| vec![a, b]).collect();
        out.push(realize(Category::Gl2, domain, codomain, &blocks)?);
    }
    Ok(out)
}

fn realize(
    category: Category,
    domain: &ObjectWord,
    codomain: &ObjectWord,
    blocks: &[Vec<usize>],
) -> Result<LayeredDiagram, DiagramError> {
    let k = domain.len();
    let l = codomain.len();
    let split: Vec<(usize, Vec<usize>, Vec<usize>)> = blocks
        .iter()
        .enumerate()
        .map(|(id, pts)| {
            let bottom: Vec<usize> = pts.iter().copied().filter(|&p| p <= k).collect();
            let top: Vec<usize> = pts.iter().copied().filter(|&p| p > k).collect();
            (id, bottom, top)
        })
        .collect();

    // Through strands keep their orientation from bottom to top.
    if category == Category::Gl2 {
        for (_, bottom, top) in &split {
            if bottom.is_empty() || top.is_empty() {
                continue;
            }
            let lb = domain.labels[bottom[0] - 1];
            for &t in top {
                if codomain.labels[k + l - t] != lb {
                    return Err(DiagramError::NoValidPhantomPlacement);
                }
            }
        }
    }

    let bottom_parts: Vec<(usize, Vec<usize>, bool)> = split
        .iter()
        .map(|(id, bottom, top)| {
            (
                *id,
                bottom.iter().map(|&p| p - 1).collect(),
                !top.is_empty(),
            )
        })
        .collect();
    let (bottom_layers, mid_bottom) = half_phase(category, &domain.labels, &bottom_parts)?;

    // Mirror: codomain word as a bottom word; top point p at position k+l-p.
    let top_parts: Vec<(usize, Vec<usize>, bool)> = split
        .iter()
        .map(|(id, bottom, top)| {
            let mut pos: Vec<usize> = top.iter().map(|&p| k + l - p).collect();
            pos.sort();
            (*id, pos, !bottom.is_empty())
        })
        .collect();
    let (top_layers, mid_top) = half_phase(category, &codomain.labels, &top_parts)?;

    if mid_bottom.len() != mid_top.len()
        || mid_bottom
            .iter()
            .zip(mid_top.iter())
            .any(|(a, b)| a.label != b.label || a.id != b.id)
    {
        return Err(DiagramError::ComposeMismatch);
    }

    let bottom = LayeredDiagram::new(domain.clone(), bottom_layers);
    let top = LayeredDiagram::new(codomain.clone(), top_layers).transpose()?;
    bottom.then(&top)
}

/// Close every block living entirely in this half and reduce each through
/// block to a single strand. `parts` lists `(block id, word positions,
/// is_through)`. Returns the layers applied and the mid word.
fn half_phase(
    category: Category,
    word: &[StrandLabel],
    parts: &[(usize, Vec<usize>, bool)],
) -> Result<(Vec<(usize, GeneratorName)>, Vec<Slot>), DiagramError> {
    let mut slots: Vec<Slot> = word
        .iter()
        .enumerate()
        .map(|(i, &label)| Slot {
            label,
            id: SlotId::Point(i),
        })
        .collect();
    let mut layers: Vec<(usize, GeneratorName)> = Vec::new();

    let mut local: Vec<&(usize, Vec<usize>, bool)> = parts
        .iter()
        .filter(|(_, pos, through)| !through && !pos.is_empty())
        .collect();
    // Innermost blocks first.
    local.sort_by_key(|(_, pos, _)| {
        pos.iter().max().copied().unwrap_or(0) - pos.iter().min().copied().unwrap_or(0)
    });
    for (_, pos, _) in local {
        let idxs = locate(&slots, pos)?;
        close_block(category, &mut slots, &mut layers, idxs)?;
    }

    let mut through: Vec<&(usize, Vec<usize>, bool)> = parts
        .iter()
        .filter(|(_, pos, through)| *through && !pos.is_empty())
        .collect();
    through.sort_by_key(|(_, pos, _)| pos.iter().min().copied().unwrap_or(0));
    for (id, pos, _) in through {
        let idxs = locate(&slots, pos)?;
        let base = idxs[0];
        let mut count = idxs.len();
        while count > 1 {
            merge_pair(&mut slots, &mut layers, base);
            count -= 1;
        }
        slots[base].id = SlotId::Through(*id);
    }

    close_stubs(&mut slots, &mut layers)?;
    Ok((layers, slots))
}

/// Current indices of the given original positions; they must form a
/// contiguous run (guaranteed by noncrossing once inner blocks are closed).
fn locate(slots: &[Slot], positions: &[usize]) -> Result<Vec<usize>, DiagramError> {
    let idxs: Vec<usize> = slots
        .iter()
        .enumerate()
        .filter(|(_, s)| matches!(s.id, SlotId::Point(p) if positions.contains(&p)))
        .map(|(i, _)| i)
        .collect();
    if idxs.len() != positions.len() || idxs.windows(2).any(|w| w[1] != w[0] + 1) {
        return Err(DiagramError::ComposeMismatch);
    }
    Ok(idxs)
}

fn close_block(
    category: Category,
    slots: &mut Vec<Slot>,
    layers: &mut Vec<(usize, GeneratorName)>,
    idxs: Vec<usize>,
) -> Result<(), DiagramError> {
    let pos = idxs[0];
    let mut count = idxs.len();
    match category {
        Category::Sl2 | Category::So3 => {
            while count > 3 {
                merge_pair(slots, layers, pos);
                count -= 1;
            }
            if count == 3 {
                layers.push((pos, Tup));
                slots.drain(pos..pos + 3);
            } else {
                layers.push((pos, Cap));
                slots.drain(pos..pos + 2);
            }
        }
        Category::Gl2 => {
            debug_assert_eq!(count, 2);
            let a = slots[pos].label;
            let b = slots[pos + 1].label;
            match (a, b) {
                (StrandLabel::X, StrandLabel::Y) => {
                    layers.push((pos, Cap));
                    slots.drain(pos..pos + 2);
                }
                (StrandLabel::Y, StrandLabel::X) => {
                    layers.push((pos, CapPrime));
                    slots.drain(pos..pos + 2);
                }
                (StrandLabel::X, StrandLabel::X) => {
                    // X X -> P stub via a trivalent vertex
                    layers.push((pos + 2, PCup));
                    layers.push((pos + 1, MixedCross));
                    layers.push((pos, Tup));
                    slots.drain(pos..pos + 2);
                    slots.insert(
                        pos,
                        Slot {
                            label: StrandLabel::P,
                            id: SlotId::Stub,
                        },
                    );
                }
                (StrandLabel::Y, StrandLabel::Y) => {
                    // Y Y -> Q stub via the dual vertex
                    layers.push((pos + 1, Tdown));
                    layers.push((pos, CapPrime));
                    layers.push((pos + 1, Cap));
                    slots.drain(pos..pos + 2);
                    slots.insert(
                        pos,
                        Slot {
                            label: StrandLabel::Q,
                            id: SlotId::Stub,
                        },
                    );
                }
                _ => return Err(DiagramError::NoValidPhantomPlacement),
            }
        }
    }
    Ok(())
}

/// Merge the two adjacent usual strands at `pos`, `pos + 1` into one with a
/// bent trivalent vertex (SO3 only).
fn merge_pair(slots: &mut Vec<Slot>, layers: &mut Vec<(usize, GeneratorName)>, pos: usize) {
    layers.push((pos + 2, Cup));
    layers.push((pos, Tup));
    let keep = slots[pos];
    slots.drain(pos..pos + 2);
    slots.insert(pos, keep);
}

/// Pair phantom stubs with pcaps, crossing over intervening usual strands.
fn close_stubs(
    slots: &mut Vec<Slot>,
    layers: &mut Vec<(usize, GeneratorName)>,
) -> Result<(), DiagramError> {
    loop {
        let stubs: Vec<usize> = slots
            .iter()
            .enumerate()
            .filter(|(_, s)| s.id == SlotId::Stub)
            .map(|(i, _)| i)
            .collect();
        if stubs.is_empty() {
            return Ok(());
        }
        let mut pair = None;
        for w in stubs.windows(2) {
            if slots[w[0]].label != slots[w[1]].label {
                pair = Some((w[0], w[1]));
                break;
            }
        }
        let (mut i, j) = pair.ok_or(DiagramError::NoValidPhantomPlacement)?;
        while i + 1 < j {
            layers.push((i, MixedCross));
            slots.swap(i, i + 1);
            i += 1;
        }
        let gen = match (slots[i].label, slots[j].label) {
            (StrandLabel::P, StrandLabel::Q) => PCap,
            (StrandLabel::Q, StrandLabel::P) => PCapPrime,
            _ => return Err(DiagramError::NoValidPhantomPlacement),
        };
        layers.push((i, gen));
        slots.drain(i..=j);
    }
}

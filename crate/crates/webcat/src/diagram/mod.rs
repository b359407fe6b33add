//! Web diagrams as layered words: the data model shared by all three
//! categories, with type checking, composition and tensor product.

mod build;
mod matching;
mod partition;

pub use build::{gl2_basis, matching_to_diagram, partition_to_diagram};
pub use matching::{enumerate_matchings, Matching};
pub use partition::{enumerate_planar_partitions, PlanarPartition};

use serde::{Deserialize, Serialize};

use crate::error::DiagramError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Sl2,
    Gl2,
    So3,
}

impl std::fmt::Display for Category {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Category::Sl2 => write!(f, "sl2"),
            Category::Gl2 => write!(f, "gl2"),
            Category::So3 => write!(f, "so3"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StrandLabel {
    /// Usual strand. Unoriented for SL2/SO3, upward for GL2.
    X,
    /// Usual strand oriented downward (GL2 only).
    Y,
    /// Phantom strand oriented upward (GL2 only).
    P,
    /// Phantom strand oriented downward (GL2 only).
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrandKind {
    Usual,
    Phantom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Up,
    Down,
    None,
}

impl StrandLabel {
    pub fn kind(&self) -> StrandKind {
        match self {
            StrandLabel::X | StrandLabel::Y => StrandKind::Usual,
            StrandLabel::P | StrandLabel::Q => StrandKind::Phantom,
        }
    }

    /// Orientation in the given category; SL2/SO3 strands are unoriented.
    pub fn orientation(&self, category: Category) -> Orientation {
        match category {
            Category::Sl2 | Category::So3 => Orientation::None,
            Category::Gl2 => match self {
                StrandLabel::X | StrandLabel::P => Orientation::Up,
                StrandLabel::Y | StrandLabel::Q => Orientation::Down,
            },
        }
    }

    pub fn legal_for(&self, category: Category) -> bool {
        match category {
            Category::Sl2 | Category::So3 => matches!(self, StrandLabel::X),
            Category::Gl2 => true,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ObjectWord {
    pub category: Category,
    pub labels: Vec<StrandLabel>,
}

impl ObjectWord {
    pub fn new(category: Category, labels: Vec<StrandLabel>) -> Result<Self, DiagramError> {
        for l in &labels {
            if !l.legal_for(category) {
                return Err(DiagramError::IllegalLabel(*l, category));
            }
        }
        Ok(ObjectWord { category, labels })
    }

    /// `X^{(x)k}` for the unoriented categories.
    pub fn x_power(category: Category, k: usize) -> Self {
        ObjectWord {
            category,
            labels: vec![StrandLabel::X; k],
        }
    }

    pub fn empty(category: Category) -> Self {
        ObjectWord {
            category,
            labels: vec![],
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

impl std::fmt::Debug for ObjectWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}[", self.category)?;
        for l in &self.labels {
            write!(f, "{:?}", l)?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeneratorName {
    #[serde(rename = "cap")]
    Cap,
    #[serde(rename = "cup")]
    Cup,
    #[serde(rename = "cap'")]
    CapPrime,
    #[serde(rename = "cup'")]
    CupPrime,
    #[serde(rename = "pcap")]
    PCap,
    #[serde(rename = "pcup")]
    PCup,
    #[serde(rename = "pcap'")]
    PCapPrime,
    #[serde(rename = "pcup'")]
    PCupPrime,
    #[serde(rename = "tup")]
    Tup,
    #[serde(rename = "tdown")]
    Tdown,
    #[serde(rename = "cross_pos")]
    CrossPos,
    #[serde(rename = "cross_neg")]
    CrossNeg,
    #[serde(rename = "mixed_cross")]
    MixedCross,
}

impl GeneratorName {
    pub fn legal_for(&self, category: Category) -> bool {
        use GeneratorName::*;
        match category {
            Category::Sl2 => matches!(self, Cap | Cup | CrossPos | CrossNeg),
            Category::So3 => matches!(self, Cap | Cup | Tup | Tdown | CrossPos | CrossNeg),
            Category::Gl2 => true,
        }
    }

    /// Fixed domain/codomain word templates per category. `MixedCross` is
    /// polymorphic and handled separately by the validator.
    pub fn template(&self, category: Category) -> Option<(Vec<StrandLabel>, Vec<StrandLabel>)> {
        use GeneratorName::*;
        use StrandLabel::*;
        let t = match category {
            Category::Sl2 | Category::So3 => match self {
                Cap => (vec![X, X], vec![]),
                Cup => (vec![], vec![X, X]),
                Tup => (vec![X, X, X], vec![]),
                Tdown => (vec![], vec![X, X, X]),
                CrossPos | CrossNeg => (vec![X, X], vec![X, X]),
                _ => return None,
            },
            Category::Gl2 => match self {
                Cap => (vec![X, Y], vec![]),
                Cup => (vec![], vec![Y, X]),
                CapPrime => (vec![Y, X], vec![]),
                CupPrime => (vec![], vec![X, Y]),
                PCap => (vec![P, Q], vec![]),
                PCup => (vec![], vec![Q, P]),
                PCapPrime => (vec![Q, P], vec![]),
                PCupPrime => (vec![], vec![P, Q]),
                Tup => (vec![X, Q, X], vec![]),
                Tdown => (vec![], vec![X, Q, X]),
                CrossPos | CrossNeg => (vec![X, X], vec![X, X]),
                MixedCross => return None,
            },
        };
        Some(t)
    }

    /// The transposed (upside-down) generator, used when mirroring layered
    /// constructions.
    pub fn dual(&self) -> GeneratorName {
        use GeneratorName::*;
        match self {
            Cap => Cup,
            Cup => Cap,
            CapPrime => CupPrime,
            CupPrime => CapPrime,
            PCap => PCup,
            PCup => PCap,
            PCapPrime => PCupPrime,
            PCupPrime => PCapPrime,
            Tup => Tdown,
            Tdown => Tup,
            CrossPos => CrossNeg,
            CrossNeg => CrossPos,
            MixedCross => MixedCross,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Layer {
    pub offset: usize,
    #[serde(rename = "gen")]
    pub generator: GeneratorName,
}

/// A web diagram as a bottom-to-top stack of generator layers over a domain
/// word.
///
/// JSON form: `{"category": "so3", "domain": ["x", "x"], "codomain": [],
/// "layers": [{"offset": 0, "gen": "cap"}]}`; the codomain is emitted for
/// valid diagrams and checked when present on input.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LayeredDiagram {
    pub category: Category,
    pub domain: ObjectWord,
    pub layers: Vec<Layer>,
}

#[derive(Serialize, Deserialize)]
struct DiagramWire {
    category: Category,
    domain: Vec<StrandLabel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    codomain: Option<Vec<StrandLabel>>,
    layers: Vec<Layer>,
}

impl Serialize for LayeredDiagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let wire = DiagramWire {
            category: self.category,
            domain: self.domain.labels.clone(),
            codomain: self.validate().ok().map(|w| w.labels),
            layers: self.layers.clone(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LayeredDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let wire = DiagramWire::deserialize(deserializer)?;
        let domain = ObjectWord::new(wire.category, wire.domain).map_err(D::Error::custom)?;
        let d = LayeredDiagram {
            category: wire.category,
            domain,
            layers: wire.layers,
        };
        if let Some(expect) = wire.codomain {
            let got = d.validate().map_err(D::Error::custom)?;
            if got.labels != expect {
                return Err(D::Error::custom(format!(
                    "declared codomain {:?} does not match the computed {:?}",
                    expect, got.labels
                )));
            }
        }
        Ok(d)
    }
}

impl LayeredDiagram {
    pub fn new(domain: ObjectWord, layers: Vec<(usize, GeneratorName)>) -> Self {
        LayeredDiagram {
            category: domain.category,
            domain,
            layers: layers
                .into_iter()
                .map(|(offset, generator)| Layer { offset, generator })
                .collect(),
        }
    }

    pub fn identity(domain: ObjectWord) -> Self {
        LayeredDiagram {
            category: domain.category,
            domain,
            layers: vec![],
        }
    }

    /// Type-check the layer stack and return the codomain word.
    pub fn validate(&self) -> Result<ObjectWord, DiagramError> {
        let mut word = self.domain.labels.clone();
        for (idx, layer) in self.layers.iter().enumerate() {
            word = apply_layer(self.category, &word, layer, idx)?;
        }
        Ok(ObjectWord {
            category: self.category,
            labels: word,
        })
    }

    /// The word after each layer, domain first and codomain last.
    pub fn word_trace(&self) -> Result<Vec<Vec<StrandLabel>>, DiagramError> {
        let mut trace = vec![self.domain.labels.clone()];
        let mut word = self.domain.labels.clone();
        for (idx, layer) in self.layers.iter().enumerate() {
            word = apply_layer(self.category, &word, layer, idx)?;
            trace.push(word.clone());
        }
        Ok(trace)
    }

    /// Vertical composition: `top` after `self` (diagrams stack upward).
    pub fn then(&self, top: &LayeredDiagram) -> Result<LayeredDiagram, DiagramError> {
        if self.category != top.category {
            return Err(DiagramError::CategoryMismatch(self.category, top.category));
        }
        let mid = self.validate()?;
        if mid != top.domain {
            return Err(DiagramError::ComposeMismatch);
        }
        let mut layers = self.layers.clone();
        layers.extend(top.layers.iter().cloned());
        Ok(LayeredDiagram {
            category: self.category,
            domain: self.domain.clone(),
            layers,
        })
    }

    /// Horizontal (side-by-side) composition.
    pub fn tensor(&self, right: &LayeredDiagram) -> Result<LayeredDiagram, DiagramError> {
        if self.category != right.category {
            return Err(DiagramError::CategoryMismatch(
                self.category,
                right.category,
            ));
        }
        let left_cod = self.validate()?;
        let mut labels = self.domain.labels.clone();
        labels.extend(right.domain.labels.iter().cloned());
        let mut layers = self.layers.clone();
        let shift = left_cod.len();
        for l in &right.layers {
            layers.push(Layer {
                offset: l.offset + shift,
                generator: l.generator,
            });
        }
        Ok(LayeredDiagram {
            category: self.category,
            domain: ObjectWord {
                category: self.category,
                labels,
            },
            layers,
        })
    }

    /// The upside-down diagram: codomain becomes domain, layers reverse and
    /// dualize, offsets are preserved.
    pub fn transpose(&self) -> Result<LayeredDiagram, DiagramError> {
        let cod = self.validate()?;
        let layers = self
            .layers
            .iter()
            .rev()
            .map(|l| Layer {
                offset: l.offset,
                generator: l.generator.dual(),
            })
            .collect();
        Ok(LayeredDiagram {
            category: self.category,
            domain: cod,
            layers,
        })
    }

    /// Number of trivalent layers (tup/tdown), the tensor degree of the
    /// evaluated map.
    pub fn trivalent_degree(&self) -> usize {
        self.layers
            .iter()
            .filter(|l| matches!(l.generator, GeneratorName::Tup | GeneratorName::Tdown))
            .count()
    }
}

impl std::fmt::Debug for LayeredDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} |", self.domain)?;
        for l in &self.layers {
            write!(f, " {:?}@{}", l.generator, l.offset)?;
        }
        Ok(())
    }
}

/// Vertical composition `top  o  bottom` (domain of `top` must equal the
/// codomain of `bottom`).
pub fn compose(
    top: &LayeredDiagram,
    bottom: &LayeredDiagram,
) -> Result<LayeredDiagram, DiagramError> {
    bottom.then(top)
}

/// Horizontal composition, left beside right.
pub fn tensor(
    left: &LayeredDiagram,
    right: &LayeredDiagram,
) -> Result<LayeredDiagram, DiagramError> {
    left.tensor(right)
}

fn apply_layer(
    category: Category,
    word: &[StrandLabel],
    layer: &Layer,
    idx: usize,
) -> Result<Vec<StrandLabel>, DiagramError> {
    let mismatch = |reason: String| DiagramError::TypeMismatch { layer: idx, reason };
    if !layer.generator.legal_for(category) {
        return Err(mismatch(format!(
            "{:?} is not a {} generator",
            layer.generator, category
        )));
    }
    if layer.generator == GeneratorName::MixedCross {
        // Polymorphic swap of an adjacent (usual, phantom) pair.
        if layer.offset + 2 > word.len() {
            return Err(mismatch("mixed_cross needs two strands".into()));
        }
        let a = word[layer.offset];
        let b = word[layer.offset + 1];
        let kinds = (a.kind(), b.kind());
        if kinds != (StrandKind::Usual, StrandKind::Phantom)
            && kinds != (StrandKind::Phantom, StrandKind::Usual)
        {
            return Err(mismatch(format!(
                "mixed_cross needs a usual/phantom pair, found {:?}{:?}",
                a, b
            )));
        }
        let mut out = word.to_vec();
        out[layer.offset] = b;
        out[layer.offset + 1] = a;
        return Ok(out);
    }
    let (dom, cod) = layer.generator.template(category).ok_or_else(|| {
        mismatch(format!(
            "{:?} has no template in {}",
            layer.generator, category
        ))
    })?;
    if layer.offset + dom.len() > word.len() {
        return Err(mismatch(format!(
            "offset {} + arity {} exceeds word length {}",
            layer.offset,
            dom.len(),
            word.len()
        )));
    }
    let slice = &word[layer.offset..layer.offset + dom.len()];
    if slice != dom.as_slice() {
        return Err(mismatch(format!(
            "{:?} expects {:?} at offset {}, found {:?}",
            layer.generator, dom, layer.offset, slice
        )));
    }
    let mut out = Vec::with_capacity(word.len() - dom.len() + cod.len());
    out.extend_from_slice(&word[..layer.offset]);
    out.extend_from_slice(&cod);
    out.extend_from_slice(&word[layer.offset + dom.len()..]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeneratorName::*;

    fn x_word(cat: Category, k: usize) -> ObjectWord {
        ObjectWord::x_power(cat, k)
    }

    #[test]
    fn sl2_zigzag_validates_to_identity_type() {
        // cup at offset 1 over word X, then cap at offset 0: X -> X
        let d = LayeredDiagram::new(x_word(Category::Sl2, 1), vec![(1, Cup), (0, Cap)]);
        let cod = d.validate().unwrap();
        assert_eq!(cod, x_word(Category::Sl2, 1));
    }

    #[test]
    fn empty_layers_are_the_identity() {
        let d = LayeredDiagram::identity(x_word(Category::Sl2, 2));
        assert_eq!(d.validate().unwrap(), x_word(Category::Sl2, 2));
    }

    #[test]
    fn gl2_cap_on_wrong_orientation_fails() {
        // cap needs XY, word is YX
        let w = ObjectWord::new(Category::Gl2, vec![StrandLabel::Y, StrandLabel::X]).unwrap();
        let d = LayeredDiagram::new(w, vec![(0, Cap)]);
        match d.validate() {
            Err(DiagramError::TypeMismatch { layer: 0, .. }) => {}
            other => panic!("expected TypeMismatch at layer 0, got {:?}", other),
        }
    }

    #[test]
    fn circle_composes_cap_after_cup() {
        let cup = LayeredDiagram::new(ObjectWord::empty(Category::Sl2), vec![(0, Cup)]);
        let cap = LayeredDiagram::new(x_word(Category::Sl2, 2), vec![(0, Cap)]);
        let circle = cup.then(&cap).unwrap();
        assert!(circle.validate().unwrap().is_empty());
    }

    #[test]
    fn interchange_law_types_agree() {
        // (id (x) g) o (f (x) id) and (f (x) id) o (id (x) g)
        let f = LayeredDiagram::new(x_word(Category::Sl2, 2), vec![(0, Cap)]);
        let g = LayeredDiagram::new(ObjectWord::empty(Category::Sl2), vec![(0, Cup)]);
        let id2 = LayeredDiagram::identity(x_word(Category::Sl2, 2));
        let id0 = LayeredDiagram::identity(ObjectWord::empty(Category::Sl2));
        let a = f
            .tensor(&id0)
            .unwrap()
            .then(&id0.tensor(&g).unwrap())
            .unwrap();
        let b = id2
            .tensor(&g)
            .unwrap()
            .then(&f.tensor(&id2).unwrap())
            .unwrap();
        assert_eq!(a.validate().unwrap(), b.validate().unwrap());
    }

    #[test]
    fn transpose_swaps_domain_and_codomain() {
        let d = LayeredDiagram::new(x_word(Category::So3, 3), vec![(0, Tup)]);
        let t = d.transpose().unwrap();
        assert!(t.domain.is_empty());
        assert_eq!(t.validate().unwrap(), x_word(Category::So3, 3));
    }

    #[test]
    fn json_round_trip() {
        let d = LayeredDiagram::new(x_word(Category::So3, 3), vec![(0, Tup)]);
        let s = serde_json::to_string(&d).unwrap();
        assert!(s.contains("\"tup\""));
        let back: LayeredDiagram = serde_json::from_str(&s).unwrap();
        assert_eq!(d, back);
    }
}

//! Scene documents: canonical JSON with sorted keys, reals rounded to
//! 1e-6 and no insignificant whitespace, so byte equality is scene
//! equality.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::controls_groups::{Group, GroupKind};
use crate::elements::{Element, Shape};
use crate::scene::{Scene, SceneSettings};
use crate::ElementId;

pub const FORMAT_VERSION: u64 = 1;

/// Saved scene documents use this file extension.
pub const EXTENSION: &str = ".scene.json";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SceneDoc {
    pub format_version: u64,
    pub elements: Vec<Element>,
    pub groups: Vec<Group>,
    pub z_order: Vec<ElementId>,
    pub scene_settings: SceneSettings,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LoadError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported format version {0}")]
    Version(String),
    #[error("integrity error: {0}")]
    Integrity(String),
}

impl From<serde_json::Error> for LoadError {
    fn from(e: serde_json::Error) -> Self {
        LoadError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

/// Rounds every real to 1e-6 and clears negative zero.
pub fn canonicalize(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64 number");
            let scaled = (x * 1e6).round();
            let r = if scaled.is_finite() { scaled / 1e6 } else { x };
            let r = if r == 0.0 { 0.0 } else { r };
            if let Some(num) = serde_json::Number::from_f64(r) {
                *n = num;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(canonicalize),
        Value::Object(map) => map.values_mut().for_each(canonicalize),
        _ => {}
    }
}

/// Canonical compact JSON of any serializable value.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("scene types serialize");
    canonicalize(&mut v);
    serde_json::to_string(&v).expect("values serialize")
}

impl Scene {
    pub fn to_doc(&self) -> SceneDoc {
        SceneDoc {
            format_version: FORMAT_VERSION,
            elements: self.elements().cloned().collect(),
            groups: self.groups().cloned().collect(),
            z_order: self.mover().registry().to_vec(),
            scene_settings: self.settings().clone(),
        }
    }

    /// Rebuilds a scene, checking every cross reference first.
    pub fn from_doc(doc: SceneDoc) -> Result<Scene, LoadError> {
        if doc.format_version != FORMAT_VERSION {
            return Err(LoadError::Version(doc.format_version.to_string()));
        }
        let bad = |m: String| Err(LoadError::Integrity(m));
        let mut ids = BTreeSet::new();
        for id in doc.elements.iter().map(|e| e.id).chain(doc.groups.iter().map(|g| g.id)) {
            if !ids.insert(id) {
                return bad(format!("duplicate id {id}"));
            }
        }
        let shapes: BTreeMap<ElementId, &Shape> = doc.elements.iter().map(|e| (e.id, &e.shape)).collect();
        let mut parent = BTreeMap::new();
        for g in &doc.groups {
            for c in g.children() {
                if !ids.contains(&c) {
                    return bad(format!("group {} references missing {c}", g.id));
                }
                if c == g.id {
                    return bad(format!("group {} contains itself", g.id));
                }
                if let Some(p) = parent.insert(c, g.id) {
                    return bad(format!("{c} belongs to both {p} and {}", g.id));
                }
            }
            match &g.kind {
                GroupKind::Weld(w) => {
                    if !matches!(shapes.get(&w.base), Some(Shape::Rect(_)))
                        || !matches!(shapes.get(&w.roof), Some(Shape::Polygon(_)))
                    {
                        return bad(format!("weld {} needs a rect base and a polygon roof", g.id));
                    }
                }
                GroupKind::Dominant(_) => {
                    if let Some(c) = g.children().into_iter().find(|c| !shapes.contains_key(c)) {
                        return bad(format!("dominant group {} member {c} is not an element", g.id));
                    }
                }
                _ => {}
            }
        }
        for g in &doc.groups {
            let mut cur = g.id;
            for _ in 0..=doc.groups.len() {
                match parent.get(&cur) {
                    Some(&p) if p == g.id => return bad(format!("group {} is its own ancestor", g.id)),
                    Some(&p) => cur = p,
                    None => break,
                }
            }
        }
        for e in &doc.elements {
            match &e.shape {
                Shape::Scale(s) => {
                    if let Some(o) = s.owner {
                        if !matches!(shapes.get(&o), Some(Shape::Plot(_))) {
                            return bad(format!("scale {} owned by {o}, which is not a plot", e.id));
                        }
                    }
                }
                Shape::Plot(p) => {
                    for c in &p.curves {
                        if let Err(err) = c.spec.compile() {
                            return bad(format!("plot {} curve `{}`: {err}", e.id, c.spec.label()));
                        }
                    }
                }
                Shape::AreaUnderCurve(a) => {
                    if let Err(err) = a.validate() {
                        return bad(format!("area {}: {err}", e.id));
                    }
                }
                _ => {}
            }
        }
        let mut scene = Scene::new();
        scene.set_settings(doc.scene_settings);
        scene.insert_raw(doc.elements, doc.groups);
        let want: BTreeSet<ElementId> = ids.iter().copied().filter(|&id| scene.is_registrable(id)).collect();
        let have: BTreeSet<ElementId> = doc.z_order.iter().copied().collect();
        if have.len() != doc.z_order.len() {
            return bad("zOrder lists an id twice".into());
        }
        if let Some(id) = have.difference(&want).next() {
            return bad(format!("zOrder lists {id}, which is missing or not registrable"));
        }
        if let Some(id) = want.difference(&have).next() {
            return bad(format!("zOrder omits {id}"));
        }
        scene.registry_mut().reset_registry(doc.z_order);
        scene.sync_dominant_offsets(None);
        scene.refresh();
        Ok(scene)
    }
}

fn save_once(scene: &Scene) -> String {
    canonical_json(&scene.to_doc())
}

/// Canonical document for `scene`. Derived values (frames, offsets,
/// welded roofs) are settled through the loader so that saving a loaded
/// document reproduces it byte for byte.
pub fn save(scene: &Scene) -> String {
    let mut text = save_once(scene);
    for _ in 0..4 {
        let Ok(next) = load(&text).map(|s| save_once(&s)) else {
            break;
        };
        if next == text {
            break;
        }
        text = next;
    }
    text
}

/// Parses a document: syntax first, then the version, then structure and
/// cross references.
pub fn load(text: &str) -> Result<Scene, LoadError> {
    let value: Value = serde_json::from_str(text)?;
    match value.get("formatVersion") {
        None => return Err(LoadError::Version("missing".into())),
        Some(v) if v.as_u64() != Some(FORMAT_VERSION) => return Err(LoadError::Version(v.to_string())),
        Some(_) => {}
    }
    let doc: SceneDoc = serde_json::from_str(text)?;
    Scene::from_doc(doc)
}

//! Named commands: everything an application does to a scene besides
//! pointer events.

use super::{Scene, SceneError};
use crate::controls_groups::GroupKind;
use crate::elements::{Element, Shape};
use crate::funcexpr::CurveSpec;
use crate::geometry::Point;
use crate::mover::ZPosition;
use crate::plot::{Border, CommentEl};
use crate::style::{Color, Style};
use crate::ElementId;

/// Names accepted by [`Scene::apply_command`].
pub const COMMANDS: &[&str] = &[
    "setColor",
    "setStrokeWidth",
    "setFont",
    "hide",
    "show",
    "zorder",
    "addBuilding",
    "delete",
    "insertJoint",
    "deleteJoint",
    "zoomSlice",
    "resizePie",
    "moveTitle",
    "setMargin",
    "frameVisible",
    "titleVisible",
    "setTitle",
    "addCurve",
    "addParametric",
    "removeCurve",
    "setFunction",
    "setBorder",
    "addComment",
    "setRaiseOnCatch",
];

struct Args<'a> {
    name: &'a str,
    args: &'a [String],
}

impl<'a> Args<'a> {
    fn err(&self, msg: impl std::fmt::Display) -> SceneError {
        SceneError::Command(format!("{}: {msg}", self.name))
    }

    fn expect_len(&self, n: usize) -> Result<(), SceneError> {
        if self.args.len() == n {
            Ok(())
        } else {
            Err(self.err(format_args!("expects {n} arguments, got {}", self.args.len())))
        }
    }

    fn expect_range(&self, lo: usize, hi: usize) -> Result<(), SceneError> {
        if (lo..=hi).contains(&self.args.len()) {
            Ok(())
        } else {
            Err(self.err(format_args!("expects {lo} to {hi} arguments, got {}", self.args.len())))
        }
    }

    fn str(&self, i: usize) -> Result<&'a str, SceneError> {
        self.args
            .get(i)
            .map(String::as_str)
            .ok_or_else(|| self.err(format_args!("missing argument {}", i + 1)))
    }

    fn id(&self, i: usize) -> Result<ElementId, SceneError> {
        self.str(i)?.parse().map_err(|e: String| self.err(e))
    }

    fn num(&self, i: usize) -> Result<f64, SceneError> {
        let s = self.str(i)?;
        match s.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(self.err(format_args!("`{s}` is not a finite number"))),
        }
    }

    fn index(&self, i: usize) -> Result<usize, SceneError> {
        let s = self.str(i)?;
        s.parse().map_err(|_| self.err(format_args!("`{s}` is not an index")))
    }

    fn flag(&self, i: usize) -> Result<bool, SceneError> {
        match self.str(i)? {
            "true" | "on" | "1" => Ok(true),
            "false" | "off" | "0" => Ok(false),
            s => Err(self.err(format_args!("`{s}` is not a boolean"))),
        }
    }

    fn color(&self, i: usize) -> Result<Color, SceneError> {
        let s = self.str(i)?;
        s.parse().map_err(|_| self.err(format_args!("`{s}` is not a color")))
    }
}

fn set_if_changed<T: PartialEq>(slot: &mut T, value: T) -> bool {
    let changed = *slot != value;
    *slot = value;
    changed
}

impl Scene {
    /// Applies a named command. Returns whether the scene changed.
    pub fn apply_command(&mut self, name: &str, args: &[String]) -> Result<bool, SceneError> {
        let a = Args { name, args };
        let changed = match name {
            "setColor" => {
                a.expect_len(3)?;
                let (id, which, color) = (a.id(0)?, a.str(1)?, a.color(2)?);
                if let Some(g) = self.group_mut(id) {
                    match &mut g.kind {
                        GroupKind::Elastic(e) => set_if_changed(&mut e.color, color),
                        _ => return Err(a.err(format_args!("{id} has no color"))),
                    }
                } else {
                    let style = self.style_mut(&a, id)?;
                    let slot = match which {
                        "fill" => &mut style.fill,
                        "stroke" => &mut style.stroke,
                        "text" => &mut style.text_color,
                        other => return Err(a.err(format_args!("unknown color slot `{other}`"))),
                    };
                    set_if_changed(slot, color)
                }
            }
            "setStrokeWidth" => {
                a.expect_len(2)?;
                let w = a.num(1)?;
                if w < 0.0 {
                    return Err(a.err("width must not be negative"));
                }
                set_if_changed(&mut self.style_mut(&a, a.id(0)?)?.stroke_width, w)
            }
            "setFont" => {
                a.expect_range(3, 4)?;
                let (id, family, size) = (a.id(0)?, a.str(1)?.to_string(), a.num(2)?);
                let bold = if args.len() == 4 { a.flag(3)? } else { false };
                if size <= 0.0 {
                    return Err(a.err("font size must be positive"));
                }
                let font = crate::style::Font { family, size, bold };
                match self.group_mut(id).map(|g| &mut g.kind) {
                    Some(GroupKind::Elastic(e)) => set_if_changed(&mut e.font, font),
                    Some(_) => return Err(a.err(format_args!("{id} has no font"))),
                    None => set_if_changed(&mut self.style_mut(&a, id)?.font, font),
                }
            }
            "hide" | "show" => {
                a.expect_len(1)?;
                self.set_visible(a.id(0)?, name == "show")?
            }
            "zorder" => {
                a.expect_len(2)?;
                let pos: ZPosition = a.str(1)?.parse().map_err(|e: String| a.err(e))?;
                let before = self.mover().registry().to_vec();
                self.set_z_order(a.id(0)?, pos)?;
                self.mover().registry() != before.as_slice()
            }
            "addBuilding" => {
                a.expect_len(3)?;
                crate::demos::add_building(self, a.str(0)?, Point::new(a.num(1)?, a.num(2)?))?;
                true
            }
            "delete" => {
                a.expect_len(1)?;
                self.delete(a.id(0)?)?;
                true
            }
            "insertJoint" => {
                a.expect_len(4)?;
                let (id, seg, p) = (a.id(0)?, a.index(1)?, Point::new(a.num(2)?, a.num(3)?));
                match &mut self.element_ref_mut(id)?.shape {
                    Shape::Polyline(l) => l.insert_joint(seg, p)?,
                    Shape::AreaUnderCurve(u) => u.insert_joint_at_pixel(seg, p)?,
                    other => return Err(wrong(id, other, "polyline")),
                }
                true
            }
            "deleteJoint" => {
                a.expect_len(2)?;
                let (id, i) = (a.id(0)?, a.index(1)?);
                match &mut self.element_ref_mut(id)?.shape {
                    Shape::Polyline(l) => {
                        l.delete_joint(i)?;
                    }
                    Shape::AreaUnderCurve(u) => u.delete_joint(i)?,
                    other => return Err(wrong(id, other, "polyline")),
                }
                true
            }
            "zoomSlice" => {
                a.expect_len(3)?;
                let (id, i, f) = (a.id(0)?, a.index(1)?, a.num(2)?);
                match &mut self.element_ref_mut(id)?.shape {
                    Shape::Pie(p) => p.zoom_slice(i, f)?,
                    other => return Err(wrong(id, other, "pie")),
                }
                f != 1.0
            }
            "resizePie" => {
                a.expect_len(2)?;
                let (id, f) = (a.id(0)?, a.num(1)?);
                match &mut self.element_ref_mut(id)?.shape {
                    Shape::Pie(p) => p.resize(f)?,
                    other => return Err(wrong(id, other, "pie")),
                }
                f != 1.0
            }
            "moveTitle" => {
                a.expect_len(2)?;
                let t = a.num(1)?;
                self.elastic_mut(&a, a.id(0)?)?.move_title(t)
            }
            "setMargin" => {
                a.expect_len(2)?;
                let m = a.num(1)?;
                if m < 0.0 {
                    return Err(a.err("margin must not be negative"));
                }
                set_if_changed(&mut self.elastic_mut(&a, a.id(0)?)?.margin, m)
            }
            "frameVisible" => {
                a.expect_len(2)?;
                let on = a.flag(1)?;
                let id = a.id(0)?;
                match self.group_mut(id).map(|g| &mut g.kind) {
                    Some(GroupKind::Elastic(e)) => set_if_changed(&mut e.frame_visible, on),
                    Some(GroupKind::Fixed(f)) => set_if_changed(&mut f.frame_visible, on),
                    _ => return Err(a.err(format_args!("{id} has no frame"))),
                }
            }
            "titleVisible" => {
                a.expect_len(2)?;
                let on = a.flag(1)?;
                set_if_changed(&mut self.elastic_mut(&a, a.id(0)?)?.title.visible, on)
            }
            "setTitle" => {
                a.expect_len(2)?;
                let text = a.str(1)?.to_string();
                set_if_changed(&mut self.elastic_mut(&a, a.id(0)?)?.title.text, text)
            }
            "addCurve" => {
                a.expect_range(2, 3)?;
                let color = if args.len() == 3 { a.color(2)? } else { Color::BLACK };
                let spec = CurveSpec::y_of_x(a.str(1)?);
                self.plot_mut(a.id(0)?)?.add_curve(spec, color)?;
                true
            }
            "addParametric" => {
                a.expect_range(5, 6)?;
                let color = if args.len() == 6 { a.color(5)? } else { Color::BLACK };
                let r_range = (a.num(3)?, a.num(4)?);
                if !crate::plot::range_ok(r_range) {
                    return Err(a.err("parameter range must be increasing"));
                }
                let spec = CurveSpec::Parametric {
                    x: a.str(1)?.to_string(),
                    y: a.str(2)?.to_string(),
                    r_range,
                };
                self.plot_mut(a.id(0)?)?.add_curve(spec, color)?;
                true
            }
            "removeCurve" => {
                a.expect_len(2)?;
                let (id, i) = (a.id(0)?, a.index(1)?);
                let p = self.plot_mut(id)?;
                if i >= p.curves.len() {
                    return Err(crate::elements::ElementError::InvalidIndex {
                        index: i,
                        len: p.curves.len(),
                    }
                    .into());
                }
                p.curves.remove(i);
                true
            }
            "setFunction" => {
                a.expect_len(2)?;
                let (id, text) = (a.id(0)?, a.str(1)?);
                match &mut self.element_ref_mut(id)?.shape {
                    Shape::AreaUnderCurve(u) => {
                        let before = u.function.clone();
                        u.set_formula(text)?;
                        u.function != before
                    }
                    other => return Err(wrong(id, other, "areaUnderCurve")),
                }
            }
            "setBorder" => {
                a.expect_len(3)?;
                let (id, value) = (a.id(0)?, a.num(2)?);
                let which: Border = a.str(1)?.parse().map_err(|e: String| a.err(e))?;
                match &mut self.element_ref_mut(id)?.shape {
                    Shape::AreaUnderCurve(u) => u.move_border(which, value),
                    other => return Err(wrong(id, other, "areaUnderCurve")),
                }
            }
            "addComment" => {
                a.expect_len(3)?;
                let c = CommentEl::new(Point::new(a.num(0)?, a.num(1)?), a.str(2)?);
                self.add_element(Shape::Comment(c), Style::default());
                true
            }
            "setRaiseOnCatch" => {
                a.expect_len(1)?;
                let mut s = self.settings().clone();
                let changed = set_if_changed(&mut s.raise_on_catch, a.flag(0)?);
                self.set_settings(s);
                changed
            }
            other => return Err(SceneError::Command(format!("unknown command `{other}`"))),
        };
        self.refresh();
        Ok(changed)
    }

    fn element_ref_mut(&mut self, id: ElementId) -> Result<&mut Element, SceneError> {
        if self.group(id).is_some() {
            return Err(SceneError::WrongKind {
                id,
                found: "group",
                expected: "element",
            });
        }
        self.element_mut(id).ok_or(SceneError::UnknownId(id))
    }

    fn style_mut(&mut self, _: &Args, id: ElementId) -> Result<&mut Style, SceneError> {
        Ok(&mut self.element_ref_mut(id)?.style)
    }

    fn elastic_mut(
        &mut self,
        a: &Args,
        id: ElementId,
    ) -> Result<&mut crate::controls_groups::ElasticGroup, SceneError> {
        match self.group_mut(id).map(|g| &mut g.kind) {
            Some(GroupKind::Elastic(e)) => Ok(e),
            Some(_) => Err(a.err(format_args!("{id} is not an elastic group"))),
            None => Err(SceneError::UnknownId(id)),
        }
    }

    fn plot_mut(&mut self, id: ElementId) -> Result<&mut crate::plot::PlottingArea, SceneError> {
        match &mut self.element_ref_mut(id)?.shape {
            Shape::Plot(p) => Ok(p),
            other => Err(wrong(id, other, "plot")),
        }
    }
}

fn wrong(id: ElementId, found: &Shape, expected: &'static str) -> SceneError {
    SceneError::WrongKind {
        id,
        found: found.kind(),
        expected,
    }
}

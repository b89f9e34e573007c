use super::Scene;
use crate::controls_groups::GroupKind;
use crate::render::{Primitive, RenderItem, RenderList};
use crate::style::Color;
use crate::ElementId;

impl Scene {
    /// Drawing primitives in paint order. Members of fixed and dynamic
    /// groups are drawn with their group since they are not registered.
    pub fn render(&self) -> RenderList {
        let mut items = Vec::new();
        for &id in self.mover().registry() {
            self.draw_item(id, &mut items);
        }
        RenderList {
            items,
            cursor: self.cursor(),
        }
    }

    fn draw_item(&self, id: ElementId, items: &mut Vec<RenderItem>) {
        if !self.is_effectively_visible(id) {
            return;
        }
        let mut prims = Vec::new();
        if let Some(e) = self.element(id) {
            e.shape.draw(&e.style, &mut prims);
            push(items, id, prims);
            return;
        }
        let Some(g) = self.group(id) else { return };
        match &g.kind {
            GroupKind::Elastic(e) => {
                e.draw(&mut prims);
                push(items, id, prims);
            }
            GroupKind::Fixed(f) => {
                if f.frame_visible {
                    if let Some(b) = self.item_bounds(id) {
                        prims.push(Primitive::rect(&b, Color::TRANSPARENT, Color::BLACK, 1.0));
                    }
                }
                push(items, id, prims);
                for c in &f.children {
                    self.draw_member(*c, items);
                }
            }
            GroupKind::Dynamic(d) => {
                prims.push(Primitive::rect(&d.frame, Color::TRANSPARENT, Color::BLACK, 1.0));
                push(items, id, prims);
                for c in &d.children {
                    self.draw_member(c.id, items);
                }
            }
            GroupKind::Dominant(_) | GroupKind::Weld(_) => {}
        }
    }

    /// Draws an unregistered member and, for nested groups, its members.
    fn draw_member(&self, id: ElementId, items: &mut Vec<RenderItem>) {
        self.draw_item(id, items);
        if let Some(g) = self.group(id) {
            if g.children_registered() {
                for c in g.children() {
                    self.draw_member(c, items);
                }
            }
        }
    }
}

fn push(items: &mut Vec<RenderItem>, element: ElementId, prims: Vec<Primitive>) {
    items.extend(prims.into_iter().map(|primitive| RenderItem { element, primitive }));
}

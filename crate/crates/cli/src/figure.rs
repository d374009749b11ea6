//! SVG figures of the main configurations. Geometry is computed on the
//! requested backend and rendered in floats.

use std::fmt::Write;

use coaxal_core::bary::{collinear, join, meet, HLine, HPoint, TriangleMetric};
use coaxal_core::cartesian::{CartCircle, Cycle, Line2};
use coaxal_core::centers::{named_center, CenterId};
use coaxal_core::circles::{
    self, circle_through_3, coaxal, conic_line_second_intersection, radical_axis, Circle, Conic,
};
use coaxal_core::constructions::{
    bisector_feet, circumcevian_triangle, euler_line, identity_derived, invert_bary_circle, invert_bary_point,
    orthotransversal,
};
use coaxal_core::scalar::convert;
use coaxal_core::theorems::{
    centered_through_vertex, cevian_circles, incenter_centroid_conic, theorem10_locus, Theorem10Kind,
};

use crate::sampling::on_circumconic_at;
use coaxal_core::{Result, Scalar};

const WIDTH: f64 = 800.0;
const CONIC_SAMPLES: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureId {
    Theorem5,
    Lemma6,
    Inversion,
    Theorem7,
    Theorem10,
}

impl FigureId {
    pub const ALL: [FigureId; 5] =
        [FigureId::Theorem5, FigureId::Lemma6, FigureId::Inversion, FigureId::Theorem7, FigureId::Theorem10];

    pub fn as_str(self) -> &'static str {
        match self {
            FigureId::Theorem5 => "theorem5",
            FigureId::Lemma6 => "lemma6",
            FigureId::Inversion => "inversion",
            FigureId::Theorem7 => "theorem7",
            FigureId::Theorem10 => "theorem10",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.as_str() == s)
    }
}

#[derive(Clone, Debug, Default)]
pub struct FigureInputs<S: Scalar> {
    pub p: Option<HPoint<S>>,
    pub q: Option<HPoint<S>>,
    pub q_on_conic: Option<S>,
}

type Pt = (f64, f64);

enum Item {
    Polygon(Vec<Pt>, &'static str),
    Line(Line2<f64>, &'static str),
    Circle(Pt, f64, &'static str),
    Polyline(Vec<Pt>, &'static str),
    Point(Pt, String),
}

struct Scene<'a, S: Scalar> {
    t: &'a TriangleMetric<S>,
    items: Vec<Item>,
    extent: Vec<Pt>,
}

fn f64_line<S: Scalar>(l: &Line2<S>) -> Result<Line2<f64>> {
    Line2::new(l.a.to_f64(), l.b.to_f64(), l.c.to_f64())
}

impl<'a, S: Scalar> Scene<'a, S> {
    fn new(t: &'a TriangleMetric<S>) -> Result<Self> {
        let mut s = Scene { t, items: Vec::new(), extent: Vec::new() };
        let v = [0, 1, 2].map(HPoint::vertex);
        let pts = v.iter().map(|p| s.xy(p)).collect::<Result<Vec<_>>>()?;
        s.extent.extend(pts.iter().copied());
        s.items.push(Item::Polygon(pts, "triangle"));
        for (i, name) in ["A", "B", "C"].iter().enumerate() {
            s.point(&v[i], name)?;
        }
        Ok(s)
    }

    fn xy(&self, p: &HPoint<S>) -> Result<Pt> {
        Ok(self.t.to_cartesian(p)?.to_f64())
    }

    fn point(&mut self, p: &HPoint<S>, label: &str) -> Result<()> {
        if !p.is_finite() {
            return Ok(());
        }
        let xy = self.xy(p)?;
        self.extent.push(xy);
        self.items.push(Item::Point(xy, label.to_string()));
        Ok(())
    }

    fn polygon(&mut self, pts: &[HPoint<S>], class: &'static str) -> Result<()> {
        let xy = pts.iter().map(|p| self.xy(p)).collect::<Result<Vec<_>>>()?;
        self.items.push(Item::Polygon(xy, class));
        Ok(())
    }

    fn line(&mut self, l: &HLine<S>, class: &'static str) -> Result<()> {
        if *l == HLine::at_infinity() {
            return Ok(());
        }
        let cl = self.t.line_to_cartesian(l)?;
        self.items.push(Item::Line(f64_line(&cl)?, class));
        Ok(())
    }

    fn cycle(&mut self, c: &Cycle<S>, class: &'static str) -> Result<()> {
        match c {
            Cycle::Circle(cc) => {
                let (x, y) = cc.center.to_f64();
                self.items.push(Item::Circle((x, y), cc.radius2.to_f64().max(0.0).sqrt(), class));
            }
            Cycle::Line(l) => self.items.push(Item::Line(f64_line(l)?, class)),
        }
        Ok(())
    }

    fn circle(&mut self, c: &Circle<S>, class: &'static str) -> Result<()> {
        let cyc = circles::to_cartesian(self.t, c)?;
        self.cycle(&cyc, class)
    }

    /// Polyline through the second intersections of the conic with the
    /// lines through `A`, broken where the curve passes through infinity.
    fn conic(&mut self, k: &Conic<S>, class: &'static str) -> Result<()> {
        let tf: TriangleMetric<f64> = self.t.cast()?;
        let m = k.matrix().clone().map(|row| row.map(|x| convert::<S, f64>(&x)));
        let kf = Conic::from_matrix(m)?;
        let a = HPoint::<f64>::vertex(0);
        let mut run: Vec<Pt> = Vec::new();
        let mut last_sign = 0.0;
        for i in 0..CONIC_SAMPLES {
            let th = std::f64::consts::PI * (i as f64 + 0.5) / CONIC_SAMPLES as f64;
            let line = join(&a, &HPoint::new([0.0, th.cos(), th.sin()])?)?;
            let Ok(p) = conic_line_second_intersection(&kf, &line, &a) else {
                continue;
            };
            let sum = p.coord_sum();
            let sign = sum.signum();
            if sum.abs() < 1e-9 * p.triple().iter().fold(0.0, |m: f64, x| m.max(x.abs())) || sign != last_sign {
                if run.len() > 1 {
                    self.items.push(Item::Polyline(std::mem::take(&mut run), class));
                }
                run.clear();
            }
            last_sign = sign;
            if let Ok(xy) = tf.to_cartesian(&p) {
                run.push(xy.to_f64());
            }
        }
        if run.len() > 1 {
            self.items.push(Item::Polyline(run, class));
        }
        Ok(())
    }

    fn render(self) -> String {
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        let tri = &self.extent[..3];
        let diam = tri
            .iter()
            .flat_map(|p| tri.iter().map(move |q| ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt()))
            .fold(0.0, f64::max);
        let cx = tri.iter().map(|p| p.0).sum::<f64>() / 3.0;
        let cy = tri.iter().map(|p| p.1).sum::<f64>() / 3.0;
        for p in self.extent.iter().filter(|p| ((p.0 - cx).powi(2) + (p.1 - cy).powi(2)).sqrt() < 2.0 * diam) {
            x0 = x0.min(p.0);
            y0 = y0.min(p.1);
            x1 = x1.max(p.0);
            y1 = y1.max(p.1);
        }
        let (mx, my) = (0.1 * (x1 - x0), 0.1 * (y1 - y0));
        let (x0, y0, x1, y1) = (x0 - mx, y0 - my, x1 + mx, y1 + my);
        let scale = WIDTH / (x1 - x0);
        let height = (y1 - y0) * scale;
        let map = |p: Pt| ((p.0 - x0) * scale, (y1 - p.1) * scale);
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{height:.0}" viewBox="0 0 {WIDTH:.0} {height:.0}">"#
        );
        out.push_str(concat!(
            "<style>",
            ".triangle{fill:none;stroke:#000;stroke-width:1.6}",
            ".derived{fill:none;stroke:#555;stroke-width:1.2;stroke-dasharray:4 2}",
            ".ref{fill:none;stroke:#333;stroke-width:1}",
            ".pencil{fill:none;stroke:#1f77b4;stroke-width:1}",
            ".aux{fill:none;stroke:#2ca02c;stroke-width:1}",
            ".conic{fill:none;stroke:#9467bd;stroke-width:1}",
            ".axis{stroke:#d62728;stroke-width:1.2}",
            ".line{stroke:#7f7f7f;stroke-width:0.8}",
            "text{font:12px sans-serif}",
            "</style>\n"
        ));
        for item in &self.items {
            match item {
                Item::Polygon(pts, class) => {
                    let pts: Vec<String> =
                        pts.iter().map(|&p| map(p)).map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
                    let _ = writeln!(out, r#"<polygon class="{class}" points="{}"/>"#, pts.join(" "));
                }
                Item::Polyline(pts, class) => {
                    let pts: Vec<String> =
                        pts.iter().map(|&p| map(p)).map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
                    let _ = writeln!(out, r#"<polyline class="{class}" points="{}"/>"#, pts.join(" "));
                }
                Item::Circle(c, r, class) => {
                    let (x, y) = map(*c);
                    let _ = writeln!(out, r#"<circle class="{class}" cx="{x:.2}" cy="{y:.2}" r="{:.2}"/>"#, r * scale);
                }
                Item::Line(l, class) => {
                    if let Some((a, b)) = clip(l, x0, y0, x1, y1) {
                        let (ax, ay) = map(a);
                        let (bx, by) = map(b);
                        let _ = writeln!(
                            out,
                            r#"<line class="{class}" x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}"/>"#
                        );
                    }
                }
                Item::Point(p, label) => {
                    let (x, y) = map(*p);
                    let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="2.5"/>"#);
                    let _ = writeln!(out, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, x + 4.0, y - 4.0, escape(label));
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// The part of a line inside the box, if any.
fn clip(l: &Line2<f64>, x0: f64, y0: f64, x1: f64, y1: f64) -> Option<(Pt, Pt)> {
    let mut hits: Vec<Pt> = Vec::new();
    if l.b.abs() > 1e-12 {
        for x in [x0, x1] {
            let y = -(l.a * x + l.c) / l.b;
            if (y0..=y1).contains(&y) {
                hits.push((x, y));
            }
        }
    }
    if l.a.abs() > 1e-12 {
        for y in [y0, y1] {
            let x = -(l.b * y + l.c) / l.a;
            if (x0..=x1).contains(&x) {
                hits.push((x, y));
            }
        }
    }
    let first = *hits.first()?;
    let far = hits
        .iter()
        .copied()
        .max_by(|p, q| {
            let d = |r: &Pt| (r.0 - first.0).powi(2) + (r.1 - first.1).powi(2);
            d(p).total_cmp(&d(q))
        })?;
    Some((first, far))
}

pub fn render<S: Scalar>(id: FigureId, t: &TriangleMetric<S>, inputs: &FigureInputs<S>) -> Result<String> {
    let mut s = Scene::new(t)?;
    match id {
        FigureId::Theorem5 => theorem5(&mut s, inputs)?,
        FigureId::Lemma6 => lemma6(&mut s)?,
        FigureId::Inversion => inversion(&mut s)?,
        FigureId::Theorem7 => theorem7(&mut s, inputs)?,
        FigureId::Theorem10 => theorem10(&mut s, inputs)?,
    }
    Ok(s.render())
}

fn pencil<S: Scalar>(s: &mut Scene<S>, cs: &[Circle<S>; 3]) -> Result<()> {
    for c in cs {
        s.circle(c, "pencil")?;
    }
    let pv = coaxal(&cs[0], &cs[1], &cs[2])?;
    if let (true, Some(ax)) = (pv.coaxal, &pv.common_radical_axis) {
        s.line(ax, "axis")?;
    }
    Ok(())
}

fn labelled<S: Scalar>(s: &mut Scene<S>, pts: &[HPoint<S>], names: [&str; 3]) -> Result<()> {
    for (p, n) in pts.iter().zip(names) {
        s.point(p, n)?;
    }
    Ok(())
}

fn theorem5<S: Scalar>(s: &mut Scene<S>, inputs: &FigureInputs<S>) -> Result<()> {
    let t = s.t;
    let conic = incenter_centroid_conic(t)?;
    let q = match (&inputs.q, &inputs.q_on_conic) {
        (Some(q), _) => q.clone(),
        (None, Some(tau)) => on_circumconic_at(&conic, tau)?,
        (None, None) => named_center(t, CenterId::K)?,
    };
    let i = named_center(t, CenterId::I)?;
    s.circle(&Circle::circumcircle(t), "ref")?;
    s.conic(&conic, "conic")?;
    let cc = cevian_circles(t, &i, &q)?;
    pencil(s, &cc.circles)?;
    labelled(s, &cc.traces.points().map(|p| p.clone()), ["X", "Y", "Z"])?;
    labelled(s, &cc.circumcevian, ["A′", "B′", "C′"])?;
    s.point(&i, "I")?;
    s.point(&q, "Q")?;
    s.point(&named_center(t, CenterId::X58)?, "X58")
}

fn lemma6<S: Scalar>(s: &mut Scene<S>) -> Result<()> {
    let t = s.t;
    let circ = Circle::circumcircle(t);
    s.circle(&circ, "ref")?;
    let i = named_center(t, CenterId::I)?;
    let ic = CartCircle::new(t.to_cartesian(&i)?, t.area2().clone() / {
        let sp = t.semiperimeter()?;
        sp.clone() * sp
    });
    s.cycle(&Cycle::Circle(ic), "ref")?;
    let ap = circumcevian_triangle(t, &named_center(t, CenterId::X56)?)?;
    let arcs = [CenterId::Mprime, CenterId::Nprime, CenterId::Pprime].map(|id| named_center(t, id));
    let contacts = [CenterId::D, CenterId::E, CenterId::F].map(|id| named_center(t, id));
    let feet = bisector_feet(t)?.internal;
    let mut us = Vec::new();
    for v in 0..3 {
        let (j, k) = ((v + 1) % 3, (v + 2) % 3);
        let arc = arcs[v].clone()?;
        let c1 = circle_through_3(t, &ap[v], &arc, &feet[v])?;
        let c2 = circle_through_3(t, &ap[j], &ap[k], &feet[v])?;
        s.circle(&c1, "pencil")?;
        s.circle(&c2, "aux")?;
        us.push(meet(&radical_axis(&c1, &circ)?, &radical_axis(&c2, &circ)?)?);
        s.point(&arc, ["M′", "N′", "P′"][v])?;
        s.point(&contacts[v].clone()?, ["D", "E", "F"][v])?;
    }
    labelled(s, &ap, ["A′", "B′", "C′"])?;
    labelled(s, &feet, ["X", "Y", "Z"])?;
    labelled(s, &us, ["U", "V", "W"])?;
    if collinear(&us[0], &us[1], &us[2]) {
        s.line(&join(&us[0], &us[1])?, "axis")?;
    }
    Ok(())
}

fn inversion<S: Scalar>(s: &mut Scene<S>) -> Result<()> {
    let t = s.t;
    let i = named_center(t, CenterId::I)?;
    let sp = t.semiperimeter()?;
    let r2 = t.area2().clone() / (sp.clone() * sp);
    let ic = Cycle::Circle(CartCircle::new(t.to_cartesian(&i)?, r2.clone()));
    s.cycle(&ic, "ref")?;
    s.circle(&Circle::circumcircle(t), "ref")?;
    let a1 = [0, 1, 2].map(|v| invert_bary_point(t, &i, &r2, &HPoint::vertex(v)));
    let a1 = [a1[0].clone()?, a1[1].clone()?, a1[2].clone()?];
    s.polygon(&a1, "derived")?;
    for v in 0..3 {
        let g = invert_bary_circle(t, &i, &r2, &Circle::degenerate_line(t, HLine::sideline(v)))?;
        s.circle(&g, "aux")?;
        s.point(&named_center(t, [CenterId::D, CenterId::E, CenterId::F][v])?, ["D", "E", "F"][v])?;
    }
    s.circle(&invert_bary_circle(t, &i, &r2, &Circle::circumcircle(t))?, "pencil")?;
    labelled(s, &a1, ["A₁", "B₁", "C₁"])?;
    s.point(&i, "I")
}

fn theorem7<S: Scalar>(s: &mut Scene<S>, inputs: &FigureInputs<S>) -> Result<()> {
    let t = s.t;
    let p = match &inputs.p {
        Some(p) => p.clone(),
        None => named_center(t, CenterId::G)?,
    };
    s.circle(&Circle::circumcircle(t), "ref")?;
    s.line(&euler_line(&identity_derived(t)?)?, "line")?;
    let ot = orthotransversal(t, &p)?;
    s.line(&ot.line, "aux")?;
    let cs = [0, 1, 2].map(|v| centered_through_vertex(t, &ot.points[v], v));
    pencil(s, &[cs[0].clone()?, cs[1].clone()?, cs[2].clone()?])?;
    labelled(s, &ot.points, ["Oa", "Ob", "Oc"])?;
    s.point(&named_center(t, CenterId::O)?, "O")?;
    s.point(&named_center(t, CenterId::H)?, "H")?;
    s.point(&p, "P")
}

fn theorem10<S: Scalar>(s: &mut Scene<S>, inputs: &FigureInputs<S>) -> Result<()> {
    let t = s.t;
    let p = match &inputs.p {
        Some(p) => p.clone(),
        None => HPoint::ints(7, 3, 5),
    };
    let loc = theorem10_locus(t, &p)?;
    let q = match &inputs.q {
        Some(q) => q.clone(),
        None => {
            let tau = inputs.q_on_conic.clone().unwrap_or_else(|| S::from_int(2));
            match &loc.kind {
                Theorem10Kind::Conic(k) => on_circumconic_at(k, &tau)?,
                Theorem10Kind::Line { vertex, .. } => HPoint::vertex(*vertex).lerp(&p, &tau)?,
            }
        }
    };
    s.circle(&Circle::circumcircle(t), "ref")?;
    match &loc.kind {
        Theorem10Kind::Conic(k) => s.conic(k, "conic")?,
        Theorem10Kind::Line { line, .. } => s.line(line, "conic")?,
    }
    let cc = cevian_circles(t, &p, &q)?;
    pencil(s, &cc.circles)?;
    labelled(s, &cc.traces.points().map(|p| p.clone()), ["X", "Y", "Z"])?;
    labelled(s, &cc.circumcevian, ["A′", "B′", "C′"])?;
    s.point(&p, "P")?;
    s.point(&q, "Q")?;
    s.point(&loc.r, "R")
}

#[cfg(test)]
mod tests {
    use super::*;
    use coaxal_core::ExactTriangle;

    #[test]
    fn every_figure_renders_on_13_14_15() {
        let t = ExactTriangle::from_int_sides(13, 14, 15).unwrap();
        for id in FigureId::ALL {
            let svg = render(id, &t, &FigureInputs::default()).unwrap();
            assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"), "{}", id.as_str());
            assert_eq!(svg, render(id, &t, &FigureInputs::default()).unwrap());
        }
    }
}

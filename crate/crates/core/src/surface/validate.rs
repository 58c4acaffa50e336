//! Full validation of a surface against the contact model.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::{Mode, Surface, VerificationReport};
use crate::geometry::{classify_contact, Contact, Point3, PolygonId, ViolationReason};
use crate::graphs::Graph;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationOptions {
    /// Also require every side of every polygon to be shared with another
    /// polygon (closed surfaces).
    pub require_closed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    NotStrictlyConvex,
    Contact(ViolationReason),
    SideInThreePolygons,
    UnsharedSide,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub polygons: Vec<PolygonId>,
    pub witness: Vec<Point3>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.polygons.iter().map(|p| p.to_string()).collect();
        let what = match self.kind {
            ViolationKind::NotStrictlyConvex => "polygon is not strictly convex".to_string(),
            ViolationKind::Contact(reason) => reason.to_string(),
            ViolationKind::SideInThreePolygons => "side shared by more than two polygons".to_string(),
            ViolationKind::UnsharedSide => "side is not shared".to_string(),
        };
        write!(f, "{}: {}", ids.join("/"), what)?;
        if !self.witness.is_empty() {
            let pts: Vec<String> = self.witness.iter().map(|p| p.to_string()).collect();
            write!(f, " at {}", pts.join(", "))?;
        }
        Ok(())
    }
}

/// Worker pool for pairwise classification, sized by `POLYSURF_THREADS`
/// when set; otherwise rayon's global pool is used.
fn pool() -> Option<&'static rayon::ThreadPool> {
    static POOL: OnceLock<Option<rayon::ThreadPool>> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var("POLYSURF_THREADS").ok()?.trim().parse::<usize>().ok()?;
        rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build().ok()
    })
    .as_ref()
}

/// Index pairs `(i, j)`, `i < j`, whose bounding boxes intersect.
pub(crate) fn candidate_pairs(s: &Surface) -> Vec<(usize, usize)> {
    let polys = s.polygons();
    let mut order: Vec<usize> = (0..polys.len()).collect();
    order.sort_by(|&a, &b| polys[a].bbox().min.x.cmp(&polys[b].bbox().min.x));
    let mut pairs = Vec::new();
    for (k, &i) in order.iter().enumerate() {
        let bi = polys[i].bbox();
        for &j in &order[k + 1..] {
            let bj = polys[j].bbox();
            if bj.min.x > bi.max.x {
                break;
            }
            if bi.intersects(bj) {
                pairs.push((i.min(j), i.max(j)));
            }
        }
    }
    pairs.sort_unstable();
    pairs
}

/// Non-disjoint contacts among the given index pairs, in pair order.
pub(crate) fn classify_pairs(s: &Surface, pairs: &[(usize, usize)]) -> Vec<(usize, usize, Contact)> {
    let polys = s.polygons();
    let run = || {
        pairs
            .par_iter()
            .filter_map(|&(i, j)| match classify_contact(&polys[i], &polys[j]) {
                Contact::Disjoint => None,
                c => Some((i, j, c)),
            })
            .collect::<Vec<_>>()
    };
    match pool() {
        Some(p) => p.install(run),
        None => run(),
    }
}

pub(crate) fn validate(s: &Surface, options: &ValidationOptions) -> VerificationReport {
    let polys = s.polygons();
    let mut violations = Vec::new();
    if s.mode() == Mode::Convex {
        for p in polys.iter().filter(|p| !p.is_strictly_convex()) {
            violations.push(Violation { kind: ViolationKind::NotStrictlyConvex, polygons: vec![p.id()], witness: vec![] });
        }
    }
    let found = classify_pairs(s, &candidate_pairs(s));
    let mut contacts = BTreeMap::new();
    let mut adjacency = Graph::empty(polys.len());
    let mut side_owners: HashMap<(Point3, Point3), BTreeSet<usize>> = HashMap::new();
    for (i, j, contact) in found {
        let (a, b) = (polys[i].id(), polys[j].id());
        match &contact {
            Contact::Violation(w) => violations.push(Violation {
                kind: ViolationKind::Contact(w.reason),
                polygons: vec![a.min(b), a.max(b)],
                witness: w.points.clone(),
            }),
            Contact::SharedSide(p, q) => {
                adjacency.add_edge(i, j).expect("distinct polygons");
                side_owners.entry((p.clone(), q.clone())).or_default().extend([i, j]);
            }
            _ => {}
        }
        contacts.insert((a.min(b), a.max(b)), contact);
    }
    // With all pairwise contacts legal, a triple intersection can only fail
    // to be a single corner when one side is shared by three polygons: a
    // third polygon meets the open side only through a contact with each
    // owner that contains it, i.e. through that same complete side.
    let mut crowded: Vec<_> = side_owners.iter().filter(|(_, owners)| owners.len() > 2).collect();
    crowded.sort();
    for ((p, q), owners) in crowded {
        let mut ids: Vec<PolygonId> = owners.iter().map(|&i| polys[i].id()).collect();
        ids.sort();
        violations.push(Violation { kind: ViolationKind::SideInThreePolygons, polygons: ids, witness: vec![p.clone(), q.clone()] });
    }
    if options.require_closed {
        for (i, poly) in polys.iter().enumerate() {
            for (p, q) in poly.sides() {
                let key = if p <= q { (p.clone(), q.clone()) } else { (q.clone(), p.clone()) };
                if !side_owners.get(&key).is_some_and(|o| o.contains(&i)) {
                    violations.push(Violation {
                        kind: ViolationKind::UnsharedSide,
                        polygons: vec![poly.id()],
                        witness: vec![key.0, key.1],
                    });
                }
            }
        }
    }
    VerificationReport { valid: violations.is_empty(), contacts, violations, adjacency }
}

/// Triangles `uvw` of `adjacency` where the polygons of `v` and `w` do not
/// lie in one closed half-space of the supporting plane of `u`'s polygon.
/// Valid convex surfaces never produce any.
pub fn halfspace_violations(s: &Surface, adjacency: &Graph) -> Vec<[PolygonId; 3]> {
    let polys = s.polygons();
    let mut out = Vec::new();
    for u in 0..adjacency.n() {
        let nb = adjacency.neighbors(u);
        for (k, &v) in nb.iter().enumerate() {
            for &w in &nb[k + 1..] {
                if !adjacency.has_edge(v, w) {
                    continue;
                }
                let plane = polys[u].plane();
                let signs: BTreeSet<i8> =
                    polys[v].corners().iter().chain(polys[w].corners()).map(|c| plane.side_of(c)).collect();
                if signs.contains(&1) && signs.contains(&-1) {
                    out.push([polys[u].id(), polys[v].id(), polys[w].id()]);
                }
            }
        }
    }
    out
}

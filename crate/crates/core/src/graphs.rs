//! Half-edge graphs and the categories `Graphs`, `Forests`, `RForests`.
//!
//! A graph is a set of half-edges with an incidence map to vertices and an
//! involution `ι`; the 2-element orbits of `ι` are the internal edges, the
//! fixed points are the external legs. Morphisms between disjoint unions
//! of corollas are equivalence classes of triples `(Γ, φ₁, φ₂)` where `φ₁`
//! identifies the source with `ν(Γ)` (all internal edges cut) and `φ₂`
//! identifies the target with `π₀(Γ)` (all internal edges contracted).
//! Composition substitutes the inner graph for the vertices of the outer
//! one. Equivalence of triples is decided by the graph isomorphism forced
//! by the two `φ₁` identifications.
//!
//! Ids are dense integers and instance sizes are tiny; everything favors
//! explicit checks over clever encodings.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from graph construction and category operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// The involution is not self-inverse or moves a half-edge across
    /// index bounds.
    BadInvolution,
    /// A half-edge is incident to a vertex that does not exist.
    BadIncidence,
    /// `φ₁` or `φ₂` is not an isomorphism onto `ν(Γ)` / `π₀(Γ)`.
    BadIdentification(String),
    /// Source/target objects of composed morphisms do not agree.
    BoundaryMismatch,
    /// A flavor constraint is violated (forest acyclicity, zero-leg
    /// corollas, root compatibility).
    FlavorError(String),
    /// Attempted contraction of a loop or a non-internal edge.
    InvalidContraction,
    /// Leg labels do not match the expected corolla union.
    LabelMismatch,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::BadInvolution => write!(f, "involution is not an involution"),
            GraphError::BadIncidence => write!(f, "half-edge incident to missing vertex"),
            GraphError::BadIdentification(s) => write!(f, "bad identification: {}", s),
            GraphError::BoundaryMismatch => write!(f, "composition boundary mismatch"),
            GraphError::FlavorError(s) => write!(f, "flavor violation: {}", s),
            GraphError::InvalidContraction => write!(f, "edge cannot be contracted"),
            GraphError::LabelMismatch => write!(f, "leg labels do not match"),
        }
    }
}

/// A finite graph with half-edge structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfEdgeGraph {
    n_vertices: usize,
    /// half-edge → vertex
    incidence: Vec<usize>,
    /// the involution ι; fixed points are legs
    involution: Vec<usize>,
}

impl HalfEdgeGraph {
    pub fn new(
        n_vertices: usize,
        incidence: Vec<usize>,
        involution: Vec<usize>,
    ) -> Result<Self, GraphError> {
        if incidence.len() != involution.len() {
            return Err(GraphError::BadInvolution);
        }
        if incidence.iter().any(|&v| v >= n_vertices) {
            return Err(GraphError::BadIncidence);
        }
        let n = involution.len();
        for (h, &i) in involution.iter().enumerate() {
            if i >= n || involution[i] != h {
                return Err(GraphError::BadInvolution);
            }
        }
        Ok(HalfEdgeGraph {
            n_vertices,
            incidence,
            involution,
        })
    }

    /// A single corolla with the given number of legs.
    pub fn corolla(legs: usize) -> Self {
        HalfEdgeGraph {
            n_vertices: 1,
            incidence: vec![0; legs],
            involution: (0..legs).collect(),
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_half_edges(&self) -> usize {
        self.incidence.len()
    }

    pub fn vertex_of(&self, h: usize) -> usize {
        self.incidence[h]
    }

    pub fn partner(&self, h: usize) -> usize {
        self.involution[h]
    }

    pub fn is_leg(&self, h: usize) -> bool {
        self.involution[h] == h
    }

    /// External legs in increasing id order.
    pub fn legs(&self) -> Vec<usize> {
        (0..self.n_half_edges()).filter(|&h| self.is_leg(h)).collect()
    }

    /// Internal edges as ordered pairs `(h, ι(h))` with `h < ι(h)`.
    pub fn internal_edges(&self) -> Vec<(usize, usize)> {
        (0..self.n_half_edges())
            .filter(|&h| self.involution[h] > h)
            .map(|h| (h, self.involution[h]))
            .collect()
    }

    /// Half-edges at a vertex, in increasing id order.
    pub fn half_edges_at(&self, v: usize) -> Vec<usize> {
        (0..self.n_half_edges())
            .filter(|&h| self.incidence[h] == v)
            .collect()
    }

    /// Component id per vertex, numbered by first appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n_vertices];
        let mut next = 0;
        for start in 0..self.n_vertices {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = next;
            while let Some(v) = stack.pop() {
                for h in self.half_edges_at(v) {
                    let p = self.involution[h];
                    if p != h {
                        let w = self.incidence[p];
                        if comp[w] == usize::MAX {
                            comp[w] = next;
                            stack.push(w);
                        }
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn n_components(&self) -> usize {
        if self.n_vertices == 0 {
            0
        } else {
            self.components().iter().max().map(|&m| m + 1).unwrap_or(0)
        }
    }

    /// Cuts all internal edges open: the involution becomes the identity.
    pub fn nu(&self) -> HalfEdgeGraph {
        HalfEdgeGraph {
            n_vertices: self.n_vertices,
            incidence: self.incidence.clone(),
            involution: (0..self.n_half_edges()).collect(),
        }
    }

    /// Contracts all internal edges: one vertex per component, legs kept.
    /// Half-edge `k` of the result is the `k`-th leg of `self` in
    /// increasing id order.
    pub fn pi0(&self) -> HalfEdgeGraph {
        let comp = self.components();
        let legs = self.legs();
        HalfEdgeGraph {
            n_vertices: self.n_components(),
            incidence: legs.iter().map(|&h| comp[self.incidence[h]]).collect(),
            involution: (0..legs.len()).collect(),
        }
    }

    /// First Betti number: internal edges − vertices + components.
    pub fn loop_count(&self) -> usize {
        self.internal_edges().len() + self.n_components() - self.n_vertices
    }

    pub fn is_forest(&self) -> bool {
        self.loop_count() == 0
    }
}

/// Builds a graph from per-vertex half-edge lists and involution pairs;
/// all remaining half-edges are legs. Half-edge ids are assigned by the
/// order they appear in `vertices`.
pub fn build_graph(
    vertices: &[&[usize]],
    pairs: &[(usize, usize)],
) -> Result<HalfEdgeGraph, GraphError> {
    let mut max_h = 0usize;
    for v in vertices {
        for &h in *v {
            max_h = max_h.max(h + 1);
        }
    }
    let mut incidence = vec![usize::MAX; max_h];
    for (vi, v) in vertices.iter().enumerate() {
        for &h in *v {
            if incidence[h] != usize::MAX {
                return Err(GraphError::BadIncidence);
            }
            incidence[h] = vi;
        }
    }
    if incidence.iter().any(|&v| v == usize::MAX) {
        return Err(GraphError::BadIncidence);
    }
    let mut involution: Vec<usize> = (0..max_h).collect();
    for &(a, b) in pairs {
        if a >= max_h || b >= max_h || a == b {
            return Err(GraphError::BadInvolution);
        }
        involution[a] = b;
        involution[b] = a;
    }
    HalfEdgeGraph::new(vertices.len(), incidence, involution)
}

/// The three graph categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Graphs,
    Forests,
    RForests,
}

/// An object: an ordered disjoint union of corollas, each recorded by its
/// number of legs. Corolla `T_n` has `n + 1` legs labeled `0..=n`; in the
/// rooted flavors leg `0` is the root.
pub type CorollaUnion = Vec<usize>;

/// Image of one source corolla under `φ₁`: the vertex it lands on and the
/// half-edge at that vertex for each leg, in leg order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaImage {
    pub vertex: usize,
    pub legs: Vec<usize>,
}

/// Image of one target corolla under `φ₂`: a component of `Γ` and the
/// `Γ`-leg for each target leg, in leg order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetImage {
    pub component: usize,
    pub legs: Vec<usize>,
}

/// A morphism in `Graphs` / `Forests` / `RForests`: an equivalence class
/// of a graph with source/target identifications.
#[derive(Debug, Clone)]
pub struct GraphMorphism {
    flavor: Flavor,
    gamma: HalfEdgeGraph,
    source: CorollaUnion,
    target: CorollaUnion,
    phi1: Vec<CorollaImage>,
    phi2: Vec<TargetImage>,
}

impl GraphMorphism {
    pub fn new(
        flavor: Flavor,
        gamma: HalfEdgeGraph,
        source: CorollaUnion,
        target: CorollaUnion,
        phi1: Vec<CorollaImage>,
        phi2: Vec<TargetImage>,
    ) -> Result<Self, GraphError> {
        let m = GraphMorphism {
            flavor,
            gamma,
            source,
            target,
            phi1,
            phi2,
        };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<(), GraphError> {
        let g = &self.gamma;
        // φ₁: bijection source corollas → vertices, legs → half-edges at
        // the image vertex
        if self.phi1.len() != self.source.len() || self.source.len() != g.n_vertices() {
            return Err(GraphError::BadIdentification(String::from(
                "source corolla count must equal vertex count",
            )));
        }
        let mut seen_v = vec![false; g.n_vertices()];
        let mut seen_h = vec![false; g.n_half_edges()];
        for (i, im) in self.phi1.iter().enumerate() {
            if im.vertex >= g.n_vertices() || seen_v[im.vertex] {
                return Err(GraphError::BadIdentification(String::from(
                    "φ₁ vertex assignment is not a bijection",
                )));
            }
            seen_v[im.vertex] = true;
            if im.legs.len() != self.source[i] {
                return Err(GraphError::BadIdentification(String::from(
                    "φ₁ leg count differs from corolla legs",
                )));
            }
            for &h in &im.legs {
                if h >= g.n_half_edges() || seen_h[h] || g.vertex_of(h) != im.vertex {
                    return Err(GraphError::BadIdentification(String::from(
                        "φ₁ legs must enumerate the half-edges at the image vertex",
                    )));
                }
                seen_h[h] = true;
            }
        }
        if !seen_h.iter().all(|&b| b) {
            return Err(GraphError::BadIdentification(String::from(
                "φ₁ must cover every half-edge",
            )));
        }

        // φ₂: bijection target corollas → components, legs → graph legs of
        // the image component
        let comp = g.components();
        if self.phi2.len() != self.target.len() || self.target.len() != g.n_components() {
            return Err(GraphError::BadIdentification(String::from(
                "target corolla count must equal component count",
            )));
        }
        let mut seen_c = vec![false; g.n_components()];
        let mut seen_l = vec![false; g.n_half_edges()];
        for (j, im) in self.phi2.iter().enumerate() {
            if im.component >= g.n_components() || seen_c[im.component] {
                return Err(GraphError::BadIdentification(String::from(
                    "φ₂ component assignment is not a bijection",
                )));
            }
            seen_c[im.component] = true;
            if im.legs.len() != self.target[j] {
                return Err(GraphError::BadIdentification(String::from(
                    "φ₂ leg count differs from corolla legs",
                )));
            }
            for &h in &im.legs {
                if h >= g.n_half_edges() || !g.is_leg(h) || seen_l[h] || comp[g.vertex_of(h)] != im.component
                {
                    return Err(GraphError::BadIdentification(String::from(
                        "φ₂ legs must enumerate the graph legs of the image component",
                    )));
                }
                seen_l[h] = true;
            }
        }
        for h in g.legs() {
            if !seen_l[h] {
                return Err(GraphError::BadIdentification(String::from(
                    "φ₂ must cover every graph leg",
                )));
            }
        }

        match self.flavor {
            Flavor::Graphs => Ok(()),
            Flavor::Forests => self.validate_forest(),
            Flavor::RForests => {
                self.validate_forest()?;
                self.validate_roots()
            }
        }
    }

    fn validate_forest(&self) -> Result<(), GraphError> {
        if self.source.iter().chain(self.target.iter()).any(|&l| l == 0) {
            return Err(GraphError::FlavorError(String::from(
                "forest objects may not contain zero-leg corollas",
            )));
        }
        if !self.gamma.is_forest() {
            return Err(GraphError::FlavorError(String::from(
                "underlying graph must be a forest",
            )));
        }
        Ok(())
    }

    /// Root section derived from `φ₂`: the `Γ`-leg playing the root of
    /// each component, indexed by component.
    pub fn component_roots(&self) -> Vec<usize> {
        let mut roots = vec![usize::MAX; self.gamma.n_components()];
        for im in &self.phi2 {
            roots[im.component] = im.legs[0];
        }
        roots
    }

    /// For a forest, the half-edge at each vertex pointing toward the
    /// component root (the root leg itself at the root vertex).
    fn vertex_roots(&self) -> Vec<usize> {
        let g = &self.gamma;
        let mut out = vec![usize::MAX; g.n_vertices()];
        for &root_leg in &self.component_roots() {
            let start = g.vertex_of(root_leg);
            out[start] = root_leg;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for h in g.half_edges_at(v) {
                    let p = g.partner(h);
                    if p != h {
                        let w = g.vertex_of(p);
                        if out[w] == usize::MAX {
                            // p points from w toward v, i.e. toward the root
                            out[w] = p;
                            stack.push(w);
                        }
                    }
                }
            }
        }
        out
    }

    fn validate_roots(&self) -> Result<(), GraphError> {
        let vroots = self.vertex_roots();
        for im in &self.phi1 {
            if im.legs[0] != vroots[im.vertex] {
                return Err(GraphError::FlavorError(String::from(
                    "φ₁ must send leg 0 to the root half-edge of its vertex",
                )));
            }
        }
        Ok(())
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn gamma(&self) -> &HalfEdgeGraph {
        &self.gamma
    }

    pub fn source(&self) -> &CorollaUnion {
        &self.source
    }

    pub fn target(&self) -> &CorollaUnion {
        &self.target
    }

    pub fn phi1(&self) -> &[CorollaImage] {
        &self.phi1
    }

    pub fn phi2(&self) -> &[TargetImage] {
        &self.phi2
    }

    /// Reinterprets the morphism in another flavor, re-validating the
    /// flavor constraints.
    pub fn with_flavor(&self, flavor: Flavor) -> Result<GraphMorphism, GraphError> {
        GraphMorphism::new(
            flavor,
            self.gamma.clone(),
            self.source.clone(),
            self.target.clone(),
            self.phi1.clone(),
            self.phi2.clone(),
        )
    }

    /// The identity morphism of a corolla union.
    pub fn identity(flavor: Flavor, object: &CorollaUnion) -> Result<GraphMorphism, GraphError> {
        let mut incidence = Vec::new();
        for (v, &legs) in object.iter().enumerate() {
            incidence.extend(core::iter::repeat(v).take(legs));
        }
        let n_half = incidence.len();
        let gamma = HalfEdgeGraph::new(object.len(), incidence, (0..n_half).collect())?;
        let mut phi1 = Vec::new();
        let mut phi2 = Vec::new();
        let mut next = 0;
        for (v, &legs) in object.iter().enumerate() {
            let hs: Vec<usize> = (next..next + legs).collect();
            next += legs;
            phi1.push(CorollaImage {
                vertex: v,
                legs: hs.clone(),
            });
            phi2.push(TargetImage {
                component: v,
                legs: hs,
            });
        }
        GraphMorphism::new(flavor, gamma, object.clone(), object.clone(), phi1, phi2)
    }

    /// The cyclic rotation `τ^k` on a single corolla with `legs` legs:
    /// leg `j` of the source is identified with leg `(j + k) mod legs`.
    pub fn rotation(flavor: Flavor, legs: usize, k: usize) -> Result<GraphMorphism, GraphError> {
        let gamma = HalfEdgeGraph::corolla(legs);
        let phi1 = vec![CorollaImage {
            vertex: 0,
            legs: (0..legs).map(|j| (j + k) % legs).collect(),
        }];
        let phi2 = vec![TargetImage {
            component: 0,
            legs: (0..legs).collect(),
        }];
        GraphMorphism::new(flavor, gamma, vec![legs], vec![legs], phi1, phi2)
    }

    /// Disjoint union, concatenating objects in order.
    pub fn disjoint_union(&self, other: &GraphMorphism) -> Result<GraphMorphism, GraphError> {
        if self.flavor != other.flavor {
            return Err(GraphError::FlavorError(String::from(
                "disjoint union requires equal flavors",
            )));
        }
        let vs = self.gamma.n_vertices();
        let hs = self.gamma.n_half_edges();
        let cs = self.gamma.n_components();
        let mut incidence = self.gamma.incidence.clone();
        incidence.extend(other.gamma.incidence.iter().map(|&v| v + vs));
        let mut involution = self.gamma.involution.clone();
        involution.extend(other.gamma.involution.iter().map(|&h| h + hs));
        let gamma = HalfEdgeGraph::new(vs + other.gamma.n_vertices(), incidence, involution)?;

        let mut source = self.source.clone();
        source.extend_from_slice(&other.source);
        let mut target = self.target.clone();
        target.extend_from_slice(&other.target);

        let mut phi1 = self.phi1.clone();
        phi1.extend(other.phi1.iter().map(|im| CorollaImage {
            vertex: im.vertex + vs,
            legs: im.legs.iter().map(|&h| h + hs).collect(),
        }));
        let mut phi2 = self.phi2.clone();
        phi2.extend(other.phi2.iter().map(|im| TargetImage {
            component: im.component + cs,
            legs: im.legs.iter().map(|&h| h + hs).collect(),
        }));
        GraphMorphism::new(self.flavor, gamma, source, target, phi1, phi2)
    }

    /// Substitution composite `outer ∘ self`: replaces the vertices of the
    /// outer graph by the components of `self`.
    pub fn then(&self, outer: &GraphMorphism) -> Result<GraphMorphism, GraphError> {
        if self.flavor != outer.flavor {
            return Err(GraphError::FlavorError(String::from(
                "composition requires equal flavors",
            )));
        }
        if self.target != outer.source {
            return Err(GraphError::BoundaryMismatch);
        }

        // half-edge of outer → (corolla, leg) under φ₁
        let mut outer_pos = vec![(0usize, 0usize); outer.gamma.n_half_edges()];
        for (c, im) in outer.phi1.iter().enumerate() {
            for (l, &h) in im.legs.iter().enumerate() {
                outer_pos[h] = (c, l);
            }
        }

        // glue: inner legs matched along internal edges of the outer graph
        let mut involution = self.gamma.involution.clone();
        for (a, b) in outer.gamma.internal_edges() {
            let (ca, la) = outer_pos[a];
            let (cb, lb) = outer_pos[b];
            let x = self.phi2[ca].legs[la];
            let y = self.phi2[cb].legs[lb];
            involution[x] = y;
            involution[y] = x;
        }
        let gamma = HalfEdgeGraph::new(
            self.gamma.n_vertices(),
            self.gamma.incidence.clone(),
            involution,
        )?;

        // outer components → composite components
        let inner_comp = self.gamma.components();
        let comp = gamma.components();
        let outer_comp = outer.gamma.components();
        let mut comp_map = vec![usize::MAX; outer.gamma.n_components()];
        for v2 in 0..outer.gamma.n_vertices() {
            let corolla = match outer.gamma.half_edges_at(v2).first() {
                Some(&h) => outer_pos[h].0,
                // zero-leg corolla: locate it through φ₁
                None => outer
                    .phi1
                    .iter()
                    .position(|im| im.vertex == v2)
                    .expect("φ₁ covers all vertices"),
            };
            // the middle-object corolla `corolla` is a component of self
            let inner_component = self.phi2[corolla].component;
            let witness_vertex = inner_comp
                .iter()
                .position(|&ic| ic == inner_component)
                .expect("components are nonempty");
            comp_map[outer_comp[v2]] = comp[witness_vertex];
        }

        let phi2 = outer
            .phi2
            .iter()
            .map(|im| TargetImage {
                component: comp_map[im.component],
                legs: im
                    .legs
                    .iter()
                    .map(|&h| {
                        let (c, l) = outer_pos[h];
                        self.phi2[c].legs[l]
                    })
                    .collect(),
            })
            .collect();

        GraphMorphism::new(
            self.flavor,
            gamma,
            self.source.clone(),
            outer.target.clone(),
            self.phi1.clone(),
            phi2,
        )
    }

    /// Equivalence-class equality: checks whether the isomorphism forced
    /// by the `φ₁` identifications respects the involution and `φ₂`.
    pub fn is_isomorphic(&self, other: &GraphMorphism) -> bool {
        if self.flavor != other.flavor
            || self.source != other.source
            || self.target != other.target
            || self.gamma.n_half_edges() != other.gamma.n_half_edges()
            || self.gamma.n_vertices() != other.gamma.n_vertices()
        {
            return false;
        }
        // ψ on half-edges, forced by φ₁' ∘ φ₁⁻¹
        let mut psi = vec![usize::MAX; self.gamma.n_half_edges()];
        for (im_a, im_b) in self.phi1.iter().zip(other.phi1.iter()) {
            for (&ha, &hb) in im_a.legs.iter().zip(im_b.legs.iter()) {
                psi[ha] = hb;
            }
        }
        // involution compatibility
        for h in 0..self.gamma.n_half_edges() {
            if psi[self.gamma.partner(h)] != other.gamma.partner(psi[h]) {
                return false;
            }
        }
        // φ₂ leg compatibility
        for (im_a, im_b) in self.phi2.iter().zip(other.phi2.iter()) {
            for (&la, &lb) in im_a.legs.iter().zip(im_b.legs.iter()) {
                if psi[la] != lb {
                    return false;
                }
            }
        }
        // φ₂ component compatibility (covers closed components)
        let mut psi_v = vec![usize::MAX; self.gamma.n_vertices()];
        for (im_a, im_b) in self.phi1.iter().zip(other.phi1.iter()) {
            psi_v[im_a.vertex] = im_b.vertex;
        }
        let comp_a = self.gamma.components();
        let comp_b = other.gamma.components();
        for (im_a, im_b) in self.phi2.iter().zip(other.phi2.iter()) {
            let va = comp_a.iter().position(|&c| c == im_a.component);
            if let Some(va) = va {
                if comp_b[psi_v[va]] != im_b.component {
                    return false;
                }
            }
        }
        true
    }
}

/// The unique factorization of a forest morphism into leg rotations
/// followed by a rooted-forest morphism.
#[derive(Debug, Clone)]
pub struct StandardFactorization {
    /// The rooted part, a valid `RForests` morphism.
    pub rooted: GraphMorphism,
    /// One rotation exponent per source corolla, `k_i ∈ Z_{legs_i}`.
    pub rotations: Vec<usize>,
}

impl StandardFactorization {
    /// Recomposes `rooted ∘ ⊔ᵢ τ^{k_i}` as a `Forests` morphism.
    pub fn recompose(&self) -> Result<GraphMorphism, GraphError> {
        let rooted_f = self.rooted.with_flavor(Flavor::Forests)?;
        let mut rot: Option<GraphMorphism> = None;
        for (i, &k) in self.rotations.iter().enumerate() {
            let t = GraphMorphism::rotation(Flavor::Forests, self.rooted.source()[i], k)?;
            rot = Some(match rot {
                None => t,
                Some(r) => r.disjoint_union(&t)?,
            });
        }
        match rot {
            None => Ok(rooted_f),
            Some(r) => r.then(&rooted_f),
        }
    }
}

/// Computes the standard factorization of a `Forests` morphism: rotate
/// each source corolla so that its zeroth leg is the half-edge pointing
/// toward the component root, leaving a rooted-forest morphism.
pub fn standard_factorization(f: &GraphMorphism) -> Result<StandardFactorization, GraphError> {
    if f.flavor() == Flavor::Graphs && !f.gamma().is_forest() {
        return Err(GraphError::FlavorError(String::from(
            "standard factorization requires a forest",
        )));
    }
    if f.flavor() == Flavor::Graphs {
        return standard_factorization(&f.with_flavor(Flavor::Forests)?);
    }
    let vroots = f.vertex_roots();
    let mut rotations = Vec::with_capacity(f.phi1().len());
    let mut phi1 = Vec::with_capacity(f.phi1().len());
    for im in f.phi1() {
        let m = im.legs.len();
        let root = vroots[im.vertex];
        let p = im
            .legs
            .iter()
            .position(|&h| h == root)
            .expect("root half-edge lies at its vertex");
        // rooted legs: position j holds the original leg (j + p) mod m,
        // so leg 0 is the root; recomposing with τ^{m−p} restores the
        // input (factorizing τ itself yields k = 1)
        let legs: Vec<usize> = (0..m).map(|j| im.legs[(j + p) % m]).collect();
        rotations.push((m - p) % m);
        phi1.push(CorollaImage {
            vertex: im.vertex,
            legs,
        });
    }
    let rooted = GraphMorphism::new(
        Flavor::RForests,
        f.gamma().clone(),
        f.source().clone(),
        f.target().clone(),
        phi1,
        f.phi2().to_vec(),
    )?;
    Ok(StandardFactorization { rooted, rotations })
}

/// A ribbon graph: a half-edge graph together with a cyclic order of the
/// half-edges at every vertex and an identification of its external legs
/// with the legs of a corolla union.
#[derive(Debug, Clone)]
pub struct RibbonGraph {
    graph: HalfEdgeGraph,
    /// Per vertex, its half-edges in cyclic order.
    cyclic_orders: Vec<Vec<usize>>,
    /// The corolla union labeling `π₀`.
    target: CorollaUnion,
    /// `(corolla, leg)` for each graph leg, indexed in increasing leg id
    /// order.
    leg_map: Vec<(usize, usize)>,
}

impl RibbonGraph {
    pub fn new(
        graph: HalfEdgeGraph,
        cyclic_orders: Vec<Vec<usize>>,
        target: CorollaUnion,
        leg_map: Vec<(usize, usize)>,
    ) -> Result<Self, GraphError> {
        if cyclic_orders.len() != graph.n_vertices() {
            return Err(GraphError::BadIdentification(String::from(
                "one cyclic order per vertex required",
            )));
        }
        for (v, order) in cyclic_orders.iter().enumerate() {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            if sorted != graph.half_edges_at(v) {
                return Err(GraphError::BadIdentification(String::from(
                    "cyclic order must cover the vertex half-edges exactly once",
                )));
            }
        }
        let legs = graph.legs();
        if leg_map.len() != legs.len() {
            return Err(GraphError::LabelMismatch);
        }
        let mut seen = vec![Vec::new(); target.len()];
        for &(c, l) in &leg_map {
            if c >= target.len() || l >= target[c] {
                return Err(GraphError::LabelMismatch);
            }
            if seen[c].contains(&l) {
                return Err(GraphError::LabelMismatch);
            }
            seen[c].push(l);
        }
        if seen.iter().enumerate().any(|(c, ls)| ls.len() != target[c]) {
            return Err(GraphError::LabelMismatch);
        }
        if target.len() != graph.n_components() {
            return Err(GraphError::LabelMismatch);
        }
        Ok(RibbonGraph {
            graph,
            cyclic_orders,
            target,
            leg_map,
        })
    }

    /// A ribbon corolla with legs in their id order as cyclic order.
    pub fn corolla(legs: usize) -> Self {
        RibbonGraph {
            graph: HalfEdgeGraph::corolla(legs),
            cyclic_orders: vec![(0..legs).collect()],
            target: vec![legs],
            leg_map: (0..legs).map(|l| (0, l)).collect(),
        }
    }

    pub fn graph(&self) -> &HalfEdgeGraph {
        &self.graph
    }

    pub fn cyclic_orders(&self) -> &[Vec<usize>] {
        &self.cyclic_orders
    }

    pub fn target(&self) -> &CorollaUnion {
        &self.target
    }

    pub fn leg_map(&self) -> &[(usize, usize)] {
        &self.leg_map
    }

    pub fn loop_count(&self) -> usize {
        self.graph.loop_count()
    }

    /// Contracts an internal, non-loop edge given by one of its
    /// half-edges; the merged vertex inherits the spliced cyclic order.
    pub fn contract_edge(&self, h: usize) -> Result<RibbonGraph, GraphError> {
        let g = &self.graph;
        if h >= g.n_half_edges() || g.is_leg(h) {
            return Err(GraphError::InvalidContraction);
        }
        let hp = g.partner(h);
        let u = g.vertex_of(h);
        let v = g.vertex_of(hp);
        if u == v {
            // loop contraction is not a ribbon-graph morphism
            return Err(GraphError::InvalidContraction);
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let (h_keep, h_gone) = if g.vertex_of(h) == keep { (h, hp) } else { (hp, h) };

        // splice: rotate each order so the contracted half-edge is last,
        // then concatenate
        let rot_to_end = |order: &[usize], x: usize| -> Vec<usize> {
            let p = order.iter().position(|&y| y == x).expect("half-edge in order");
            let mut out: Vec<usize> = order[p + 1..].to_vec();
            out.extend_from_slice(&order[..p]);
            out
        };
        let merged: Vec<usize> = {
            let mut a = rot_to_end(&self.cyclic_orders[keep], h_keep);
            let b = rot_to_end(&self.cyclic_orders[gone], h_gone);
            a.extend(b);
            a
        };

        // drop the two half-edges, compact ids
        let mut new_id = vec![usize::MAX; g.n_half_edges()];
        let mut next = 0;
        for x in 0..g.n_half_edges() {
            if x != h && x != hp {
                new_id[x] = next;
                next += 1;
            }
        }
        let vertex_of_old = |x: usize| -> usize {
            let w = g.vertex_of(x);
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        let mut incidence = vec![0usize; next];
        let mut involution = vec![0usize; next];
        for x in 0..g.n_half_edges() {
            if new_id[x] == usize::MAX {
                continue;
            }
            incidence[new_id[x]] = vertex_of_old(x);
            involution[new_id[x]] = new_id[g.partner(x)];
        }
        let graph = HalfEdgeGraph::new(g.n_vertices() - 1, incidence, involution)?;

        let mut cyclic_orders: Vec<Vec<usize>> = Vec::with_capacity(graph.n_vertices());
        for w in 0..g.n_vertices() {
            if w == gone {
                continue;
            }
            let src = if w == keep { &merged } else { &self.cyclic_orders[w] };
            cyclic_orders.push(src.iter().map(|&x| new_id[x]).collect());
        }

        // legs keep their labels; only ids shift
        let old_legs = g.legs();
        let leg_map = old_legs
            .iter()
            .zip(self.leg_map.iter())
            .filter(|(&l, _)| new_id[l] != usize::MAX)
            .map(|(_, &lbl)| lbl)
            .collect();

        RibbonGraph::new(graph, cyclic_orders, self.target.clone(), leg_map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two 3-leg corollas joined by one edge, four external legs.
    fn joined_pair() -> HalfEdgeGraph {
        // vertex 0: half-edges 0,1,2 (2 glued); vertex 1: 3,4,5 (3 glued)
        build_graph(&[&[0, 1, 2], &[3, 4, 5]], &[(2, 3)]).unwrap()
    }

    fn loop_with_leg() -> HalfEdgeGraph {
        build_graph(&[&[0, 1, 2]], &[(1, 2)]).unwrap()
    }

    #[test]
    fn nu_cuts_edges() {
        let c = HalfEdgeGraph::corolla(3);
        assert_eq!(c.nu(), c);

        let j = joined_pair();
        let cut = j.nu();
        assert_eq!(cut.n_components(), 2);
        assert_eq!(cut.legs().len(), 6);

        let l = loop_with_leg();
        let cut = l.nu();
        assert_eq!(cut.n_vertices(), 1);
        assert_eq!(cut.legs().len(), 3);
        // idempotent
        assert_eq!(cut.nu(), cut);
    }

    #[test]
    fn pi0_contracts_edges() {
        let j = joined_pair();
        let contracted = j.pi0();
        assert_eq!(contracted.n_vertices(), 1);
        assert_eq!(contracted.legs().len(), 4);

        let two = build_graph(&[&[0, 1, 2], &[3, 4, 5]], &[]).unwrap();
        assert_eq!(two.pi0(), two);

        let l = loop_with_leg();
        assert_eq!(l.pi0().legs().len(), 1);
        // idempotent
        assert_eq!(l.pi0().pi0(), l.pi0());
    }

    #[test]
    fn loop_counts() {
        assert_eq!(joined_pair().loop_count(), 0);
        assert_eq!(loop_with_leg().loop_count(), 1);
        // theta graph: 2 vertices, 3 parallel edges
        let theta = build_graph(&[&[0, 1, 2], &[3, 4, 5]], &[(0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(theta.loop_count(), 2);
    }

    /// The morphism `T₂ ⊔ T₂ → T₃` joining two 3-leg corollas by an edge;
    /// `root_leg` selects which external half-edge plays target leg 0.
    fn tree_join() -> GraphMorphism {
        let gamma = joined_pair();
        GraphMorphism::new(
            Flavor::Forests,
            gamma,
            vec![3, 3],
            vec![4],
            vec![
                CorollaImage { vertex: 0, legs: vec![0, 1, 2] },
                CorollaImage { vertex: 1, legs: vec![3, 4, 5] },
            ],
            vec![TargetImage { component: 0, legs: vec![0, 1, 4, 5] }],
        )
        .unwrap()
    }

    #[test]
    fn identity_composes_trivially() {
        let f = tree_join();
        let id_src = GraphMorphism::identity(Flavor::Forests, f.source()).unwrap();
        let id_tgt = GraphMorphism::identity(Flavor::Forests, f.target()).unwrap();
        let left = id_src.then(&f).unwrap();
        let right = f.then(&id_tgt).unwrap();
        assert!(left.is_isomorphic(&f));
        assert!(right.is_isomorphic(&f));
    }

    #[test]
    fn two_step_tree_composition() {
        // T₂⊔T₂ → T₃, then T₃⊔T₂ → T₄: a 3-vertex tree with 2 internal edges
        let f = tree_join();
        let id2 = GraphMorphism::identity(Flavor::Forests, &vec![3]).unwrap();
        let step1 = f.disjoint_union(&id2).unwrap(); // T₂⊔T₂⊔T₂ → T₃⊔T₂

        let gamma2 = build_graph(&[&[0, 1, 2, 3], &[4, 5, 6]], &[(3, 4)]).unwrap();
        let g = GraphMorphism::new(
            Flavor::Forests,
            gamma2,
            vec![4, 3],
            vec![5],
            vec![
                CorollaImage { vertex: 0, legs: vec![0, 1, 2, 3] },
                CorollaImage { vertex: 1, legs: vec![4, 5, 6] },
            ],
            vec![TargetImage { component: 0, legs: vec![0, 1, 2, 5, 6] }],
        )
        .unwrap();

        let comp = step1.then(&g).unwrap();
        assert_eq!(comp.gamma().n_vertices(), 3);
        assert_eq!(comp.gamma().internal_edges().len(), 2);
        assert_eq!(comp.gamma().loop_count(), 0);
        assert_eq!(comp.target(), &vec![5]);
    }

    #[test]
    fn loop_counts_add_under_graphs_composition() {
        // self-gluing morphism: corolla T₃ (4 legs) → T₁, gluing legs 2,3
        let gamma = build_graph(&[&[0, 1, 2, 3]], &[(2, 3)]).unwrap();
        let glue = GraphMorphism::new(
            Flavor::Graphs,
            gamma,
            vec![4],
            vec![2],
            vec![CorollaImage { vertex: 0, legs: vec![0, 1, 2, 3] }],
            vec![TargetImage { component: 0, legs: vec![0, 1] }],
        )
        .unwrap();

        let f = tree_join().with_flavor(Flavor::Graphs).unwrap();
        let comp = f.then(&glue).unwrap();
        assert_eq!(
            comp.gamma().loop_count(),
            f.gamma().loop_count() + glue.gamma().loop_count()
        );
        assert_eq!(comp.gamma().loop_count(), 1);
    }

    #[test]
    fn isomorphism_detects_relabeling_and_loops() {
        let f = tree_join();
        assert!(f.is_isomorphic(&f));

        // relabel internal vertices / half-edges: swap the two vertices
        let gamma = build_graph(&[&[3, 4, 5], &[0, 1, 2]], &[(5, 0)]).unwrap();
        let g = GraphMorphism::new(
            Flavor::Forests,
            gamma,
            vec![3, 3],
            vec![4],
            vec![
                CorollaImage { vertex: 0, legs: vec![3, 4, 5] },
                CorollaImage { vertex: 1, legs: vec![0, 1, 2] },
            ],
            vec![TargetImage { component: 0, legs: vec![3, 4, 1, 2] }],
        )
        .unwrap();
        assert!(f.is_isomorphic(&g));

        // a one-loop graph with the same boundary is not isomorphic
        let gamma_loop = build_graph(&[&[0, 1, 2, 6], &[3, 4, 5, 7]], &[(2, 3), (6, 7)]).unwrap();
        let h = GraphMorphism::new(
            Flavor::Graphs,
            gamma_loop,
            vec![4, 4],
            vec![4],
            vec![
                CorollaImage { vertex: 0, legs: vec![0, 1, 2, 6] },
                CorollaImage { vertex: 1, legs: vec![3, 4, 5, 7] },
            ],
            vec![TargetImage { component: 0, legs: vec![0, 1, 4, 5] }],
        )
        .unwrap();
        assert!(!h.is_isomorphic(&f.with_flavor(Flavor::Graphs).unwrap()));
        assert_eq!(h.gamma().loop_count(), 1);
    }

    #[test]
    fn rotation_has_full_order() {
        let t = GraphMorphism::rotation(Flavor::Forests, 3, 1).unwrap();
        let t2 = t.then(&t).unwrap();
        let t3 = t2.then(&t).unwrap();
        let id = GraphMorphism::identity(Flavor::Forests, &vec![3]).unwrap();
        assert!(!t.is_isomorphic(&id));
        assert!(!t2.is_isomorphic(&id));
        assert!(t3.is_isomorphic(&id));
    }

    #[test]
    fn factorization_of_rooted_morphism_is_trivial() {
        // tree_join with target leg 0 at the first corolla is already rooted
        let f = tree_join();
        let fact = standard_factorization(&f).unwrap();
        assert_eq!(fact.rotations, vec![0, 0]);
        assert!(fact.recompose().unwrap().is_isomorphic(&f));
    }

    #[test]
    fn factorization_of_pure_rotation() {
        let t = GraphMorphism::rotation(Flavor::Forests, 4, 1).unwrap();
        let fact = standard_factorization(&t).unwrap();
        assert_eq!(fact.rotations.len(), 1);
        assert!(fact.recompose().unwrap().is_isomorphic(&t));
        // the rooted part is the identity up to equivalence
        let id = GraphMorphism::identity(Flavor::RForests, &vec![4]).unwrap();
        assert!(fact.rooted.is_isomorphic(&id));
        assert_eq!(fact.rotations, vec![1]);
    }

    #[test]
    fn factorization_matches_two_corolla_rotations() {
        // Γ = Γ' ∘ (τ₂² ⊔ τ₂) for a rooted two-corolla tree morphism Γ'
        let rooted = standard_factorization(&tree_join()).unwrap().rooted;
        let r1 = GraphMorphism::rotation(Flavor::Forests, 3, 2).unwrap();
        let r2 = GraphMorphism::rotation(Flavor::Forests, 3, 1).unwrap();
        let rot = r1.disjoint_union(&r2).unwrap();
        let f = rot.then(&rooted.with_flavor(Flavor::Forests).unwrap()).unwrap();

        let fact = standard_factorization(&f).unwrap();
        assert_eq!(fact.rotations, vec![2, 1]);
        assert!(fact.recompose().unwrap().is_isomorphic(&f));
        assert!(fact.rooted.is_isomorphic(&rooted));
    }

    #[test]
    fn composition_is_associative_up_to_isomorphism() {
        // (rot ; join) ; glue2 = rot ; (join ; glue2) on a three-stage
        // composable chain, for several rotation choices
        let join = tree_join();
        let gamma2 = build_graph(&[&[0, 1, 2, 3]], &[]).unwrap();
        let relabel = GraphMorphism::new(
            Flavor::Forests,
            gamma2,
            vec![4],
            vec![4],
            vec![CorollaImage { vertex: 0, legs: vec![1, 2, 3, 0] }],
            vec![TargetImage { component: 0, legs: vec![0, 1, 2, 3] }],
        )
        .unwrap();
        for k1 in 0..3 {
            for k2 in 0..3 {
                let rot = GraphMorphism::rotation(Flavor::Forests, 3, k1)
                    .unwrap()
                    .disjoint_union(&GraphMorphism::rotation(Flavor::Forests, 3, k2).unwrap())
                    .unwrap();
                let left = rot.then(&join).unwrap().then(&relabel).unwrap();
                let right = rot.then(&join.then(&relabel).unwrap()).unwrap();
                assert!(left.is_isomorphic(&right));
            }
        }
    }

    #[test]
    fn factorization_unique_for_three_corollas() {
        // exhaustive uniqueness over the product of cyclic groups for a
        // three-corolla forest morphism with mixed arities
        let gamma = build_graph(&[&[0, 1, 2], &[3, 4, 5, 6], &[7, 8]], &[(2, 3), (6, 7)]).unwrap();
        let base = GraphMorphism::new(
            Flavor::Forests,
            gamma,
            vec![3, 4, 2],
            vec![5],
            vec![
                CorollaImage { vertex: 0, legs: vec![0, 1, 2] },
                CorollaImage { vertex: 1, legs: vec![3, 4, 5, 6] },
                CorollaImage { vertex: 2, legs: vec![7, 8] },
            ],
            vec![TargetImage { component: 0, legs: vec![0, 1, 4, 5, 8] }],
        )
        .unwrap();
        let f = {
            let r = GraphMorphism::rotation(Flavor::Forests, 3, 1)
                .unwrap()
                .disjoint_union(&GraphMorphism::rotation(Flavor::Forests, 4, 3).unwrap())
                .unwrap()
                .disjoint_union(&GraphMorphism::rotation(Flavor::Forests, 2, 0).unwrap())
                .unwrap();
            r.then(&base).unwrap()
        };
        let fact = standard_factorization(&f).unwrap();
        assert!(fact.recompose().unwrap().is_isomorphic(&f));
        let mut hits = 0;
        for k1 in 0..3 {
            for k2 in 0..4 {
                for k3 in 0..2 {
                    let r = GraphMorphism::rotation(Flavor::Forests, 3, k1)
                        .unwrap()
                        .disjoint_union(&GraphMorphism::rotation(Flavor::Forests, 4, k2).unwrap())
                        .unwrap()
                        .disjoint_union(&GraphMorphism::rotation(Flavor::Forests, 2, k3).unwrap())
                        .unwrap();
                    let candidate = r
                        .then(&fact.rooted.with_flavor(Flavor::Forests).unwrap())
                        .unwrap();
                    if candidate.is_isomorphic(&f) {
                        hits += 1;
                        assert_eq!(vec![k1, k2, k3], fact.rotations);
                    }
                }
            }
        }
        assert_eq!(hits, 1);
    }

    #[test]
    fn factorization_rotations_are_unique() {
        let f = {
            let rooted = standard_factorization(&tree_join()).unwrap().rooted;
            let r1 = GraphMorphism::rotation(Flavor::Forests, 3, 2).unwrap();
            let r2 = GraphMorphism::rotation(Flavor::Forests, 3, 1).unwrap();
            let rot = r1.disjoint_union(&r2).unwrap();
            rot.then(&rooted.with_flavor(Flavor::Forests).unwrap()).unwrap()
        };
        let fact = standard_factorization(&f).unwrap();
        let mut matches = 0;
        for k1 in 0..3 {
            for k2 in 0..3 {
                let r1 = GraphMorphism::rotation(Flavor::Forests, 3, k1).unwrap();
                let r2 = GraphMorphism::rotation(Flavor::Forests, 3, k2).unwrap();
                let candidate = r1
                    .disjoint_union(&r2)
                    .unwrap()
                    .then(&fact.rooted.with_flavor(Flavor::Forests).unwrap())
                    .unwrap();
                if candidate.is_isomorphic(&f) {
                    matches += 1;
                    assert_eq!(vec![k1, k2], fact.rotations);
                }
            }
        }
        assert_eq!(matches, 1);
    }

    #[test]
    fn non_forest_factorization_is_rejected() {
        let gamma = build_graph(&[&[0, 1, 2, 3]], &[(2, 3)]).unwrap();
        let glue = GraphMorphism::new(
            Flavor::Graphs,
            gamma,
            vec![4],
            vec![2],
            vec![CorollaImage { vertex: 0, legs: vec![0, 1, 2, 3] }],
            vec![TargetImage { component: 0, legs: vec![0, 1] }],
        )
        .unwrap();
        assert!(matches!(
            standard_factorization(&glue),
            Err(GraphError::FlavorError(_))
        ));
    }

    fn ribbon_dumbbell_bar() -> RibbonGraph {
        // two 3-valent vertices joined by one edge, 4 legs
        let g = joined_pair();
        RibbonGraph::new(
            g,
            vec![vec![0, 1, 2], vec![3, 4, 5]],
            vec![4],
            vec![(0, 0), (0, 1), (0, 2), (0, 3)],
        )
        .unwrap()
    }

    #[test]
    fn contract_bar_splices_cyclic_order() {
        let rg = ribbon_dumbbell_bar();
        let contracted = rg.contract_edge(2).unwrap();
        assert_eq!(contracted.graph().n_vertices(), 1);
        assert_eq!(contracted.graph().legs().len(), 4);
        assert_eq!(contracted.loop_count(), rg.loop_count());
        // spliced order: 0,1 then 4,5 (relabeled to 0,1,2,3)
        assert_eq!(contracted.cyclic_orders()[0], vec![0, 1, 2, 3]);
    }

    #[test]
    fn contract_loop_is_rejected_and_bridge_keeps_loops() {
        // one loop at vertex 0, bridge to vertex 1
        let g = build_graph(&[&[0, 1, 2, 3], &[4, 5]], &[(0, 1), (3, 4)]).unwrap();
        let rg = RibbonGraph::new(
            g,
            vec![vec![0, 1, 2, 3], vec![4, 5]],
            vec![2],
            vec![(0, 0), (0, 1)],
        )
        .unwrap();
        assert_eq!(rg.loop_count(), 1);
        assert!(matches!(rg.contract_edge(0), Err(GraphError::InvalidContraction)));
        let after = rg.contract_edge(3).unwrap();
        assert_eq!(after.loop_count(), 1);
    }

    #[test]
    fn ribbon_tree_contraction_stays_tree() {
        let rg = ribbon_dumbbell_bar();
        assert_eq!(rg.loop_count(), 0);
        let smaller = rg.contract_edge(3).unwrap();
        assert_eq!(smaller.loop_count(), 0);
        assert_eq!(smaller.graph().n_vertices(), 1);
    }
}

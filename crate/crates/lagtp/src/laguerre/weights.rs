use crate::poly::{v, Poly};

/// Weights for decreasing edges, loops and increasing edges.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeWeights {
    pub vm: Poly,
    pub v0: Poly,
    pub vp: Poly,
}

impl EdgeWeights {
    pub fn symbolic() -> EdgeWeights {
        EdgeWeights { vm: v("vm"), v0: v("v0"), vp: v("vp") }
    }

    pub fn uniform(x: &Poly) -> EdgeWeights {
        EdgeWeights { vm: x.clone(), v0: x.clone(), vp: x.clone() }
    }

    pub fn ints(vm: i64, v0: i64, vp: i64) -> EdgeWeights {
        EdgeWeights { vm: Poly::int(vm), v0: Poly::int(v0), vp: Poly::int(vp) }
    }
}

/// Peak / valley / double-ascent / double-descent weights for path vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct PathWeights {
    pub zp: Poly,
    pub zv: Poly,
    pub zda: Poly,
    pub zdd: Poly,
}

/// Vertex weights. Cycle vertices use the `y` block; path vertices use `z`,
/// which defaults to the matching `y` weights.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexWeights {
    pub yp: Poly,
    pub yv: Poly,
    pub yda: Poly,
    pub ydd: Poly,
    pub yfp: Poly,
    pub z: Option<PathWeights>,
}

impl VertexWeights {
    pub fn symbolic() -> VertexWeights {
        VertexWeights { yp: v("yp"), yv: v("yv"), yda: v("yda"), ydd: v("ydd"), yfp: v("yfp"), z: None }
    }

    pub fn symbolic_general() -> VertexWeights {
        VertexWeights {
            z: Some(PathWeights { zp: v("zp"), zv: v("zv"), zda: v("zda"), zdd: v("zdd") }),
            ..VertexWeights::symbolic()
        }
    }

    /// `(yp, yv, yda, ydd, yfp)` with path weights equal to cycle weights.
    pub fn five(w: [&Poly; 5]) -> VertexWeights {
        VertexWeights { yp: w[0].clone(), yv: w[1].clone(), yda: w[2].clone(), ydd: w[3].clone(), yfp: w[4].clone(), z: None }
    }

    /// Path-vertex weights, falling back to the cycle weights.
    pub fn path(&self) -> PathWeights {
        self.z.clone().unwrap_or_else(|| PathWeights { zp: self.yp.clone(), zv: self.yv.clone(), zda: self.yda.clone(), zdd: self.ydd.clone() })
    }

    /// The weights under which the second matrix reduces to the first one
    /// times `vm^k`: each vertex carries the weight of its outgoing edge.
    pub fn from_edges_outgoing(e: &EdgeWeights) -> VertexWeights {
        VertexWeights::five([&e.vm, &e.vp, &e.vp, &e.vm, &e.v0])
    }

    /// As [`VertexWeights::from_edges_outgoing`] with incoming edges; the
    /// extra factor is `vp^k`.
    pub fn from_edges_incoming(e: &EdgeWeights) -> VertexWeights {
        VertexWeights::five([&e.vp, &e.vm, &e.vp, &e.vm, &e.v0])
    }
}

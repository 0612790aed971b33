//! Tagged triangulations of a once-punctured polygon, the ice quivers with
//! potential they define, and the Cohen-Macaulay modules over the
//! associated Gorenstein order.

pub mod cluster;
pub mod error;
pub mod graded;
pub mod homology;
pub mod oracle;
pub mod order;
pub mod polygon;
pub mod quiver;
pub mod triangulation;
pub mod verify;

pub use error::{Error, Result};
pub use polygon::{EdgeKind, Interval, PolygonCtx, TaggedEdge};
pub use triangulation::TaggedTriangulation;

pub mod census;
pub mod claims;
pub mod cli;
mod clique;
pub mod covering;
pub mod ekr;
pub mod graph;
pub mod graph6;
pub mod indep;
pub mod multipartite;
pub mod named;
pub mod report;
pub mod sweep;

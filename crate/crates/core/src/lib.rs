pub mod algebra;
pub mod binomial;
pub mod hopf;
pub mod mass;
pub mod phi;
pub mod projection;
pub mod tables;
pub mod config;
pub mod suites;

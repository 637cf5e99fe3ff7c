pub mod cech;

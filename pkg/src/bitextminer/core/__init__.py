"""Text primitives shared by every pipeline stage."""

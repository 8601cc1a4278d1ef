"""HTTP service layer wrapping the workbench."""

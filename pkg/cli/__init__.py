"""Command-line surface for the Hom-Nambu algebra workbench."""

"""
Services Package

One module per layer, each exposing a module-level service instance:
- cyclotomic_service: exact arithmetic in cyclotomic fields
- category_service: sl(2)_k data, verifiers, category files
- homspace_service: fusion-tree hom spaces and morphisms
- diagram_service: sliced ribbon diagrams
- frobenius_service: algebra checks, constructions and the haploid solver
- multimodule_service: multi-modules, twists, cyclic structures
- serialization_service: JSON forms of morphisms, algebras and modules
- defect_service: triangulations, dualization, defect spheres
- invariant_service: centers, full centers, embedded-surface invariants

Submodules are imported directly; the schemas in app.models depend on
cyclotomic_service, so this package stays free of eager imports.
"""

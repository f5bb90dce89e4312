"""Event-Model-F knowledge-graph engine.

Typed entity graph, builders and validators for the six event patterns,
spatio-temporal constraints, structural reasoning and a canonical text
interchange format.
"""
from .errors import (EventModelError, GraphError, DuplicateIri,
                     UndeclaredPrefix, InvalidIri, UnknownEntity, KindMismatch,
                     DomainViolation, RangeViolation, LiteralError,
                     InvalidRegion, DegenerateInterval, NotAComponent,
                     PatternError, EmptyParticipants, DuplicateRole,
                     EmptyComponents, CompositeAmongComponents, SelfCause,
                     TooFewCorrelates, EmptyDocumenters, SelfDocumentation,
                     EmptySituations, NonPatternSituation,
                     NotAPatternSituation, NotAnInterpretation,
                     DifferentInterpretedEvents, ParseError, LoadError)
from .graph import (DataProperty, EntityRef, GraphView, Kind, PatternClass,
                    Property, Snapshot, Store, Triple, assert_edge,
                    attach_location, attach_time, attach_trajectory,
                    new_entity, query_edges, region_values)
from .interchange import dump, load, parse, serialize
from .patterns import (CausalitySpec, CompositionSpec, CorrelationSpec,
                       DocumentationSpec, InterpretationSpec, Participant,
                       ParticipationSpec, PatternKind, build,
                       build_causality, build_composition, build_correlation,
                       build_documentation, build_interpretation,
                       build_participation, pattern_situations, view_of)
from .reasoning import (Scope, causal_chain, diff_interpretations, find_events,
                        infer_correlations, parts_closure)
from .spacetime import (COMPOSITE, AbsoluteInterval, AllenRelation,
                        ComponentRef, GeoBox, SpatialWithin,
                        SpatioTemporalWithin, Temporal, TimeInterval,
                        Trajectory, allen_relation, check_constraint)
from .validation import (CATALOG, Severity, ValidationReport, Violation,
                         validate_situation, validate_store)

__version__ = "0.1.0"

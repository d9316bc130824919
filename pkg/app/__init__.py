# Envelope lab: degree envelopes of points in the plane
__version__ = "0.1.0"

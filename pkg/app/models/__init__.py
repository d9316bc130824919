# Pydantic schemas for resolution data, envelopes and reports

# LookupCurve Feature

# ComputePairing Feature

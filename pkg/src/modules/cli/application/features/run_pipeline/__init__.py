# RunPipeline Feature

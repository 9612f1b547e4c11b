# CompareReport Feature
